#include "adsv/graphapps.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "adsv/edgecount.hpp"
#include "adsv/setops.hpp"

namespace adsv {

using oracle::DenseGraph;

// ---------------------------------------------------------------- Prover-side graph work

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// mate[v] for a maximum matching of g minus `removed`; 0 marks an unmatched vertex.
std::vector<Vertex> maximum_matching(const DenseGraph& g, const std::vector<bool>& removed) {
  BoostGraph bg(g.n + 1);
  for (Vertex u = 1; u <= g.n; ++u)
    for (Vertex v = u + 1; v <= g.n; ++v)
      if (g.a[u][v] && (removed.empty() || (!removed[u] && !removed[v]))) boost::add_edge(u, v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n + 1);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<Vertex> out(g.n + 1, 0);
  for (Vertex v = 1; v <= g.n; ++v)
    if (mate[v] != boost::graph_traits<BoostGraph>::null_vertex()) out[v] = static_cast<Vertex>(mate[v]);
  return out;
}

// Connected components of g minus `removed`, each in BFS order from its smallest vertex, with the
// BFS parent and depth of every vertex.
struct Forest {
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
};

Forest bfs_forest(const DenseGraph& g, const std::vector<bool>& removed) {
  Forest f{{}, std::vector<Vertex>(g.n + 1, 0), std::vector<std::uint32_t>(g.n + 1, 0)};
  std::vector<bool> seen(g.n + 1, false);
  for (Vertex root = 1; root <= g.n; ++root) {
    if (seen[root] || (!removed.empty() && removed[root])) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex u = comp[i];
      for (Vertex v = 1; v <= g.n; ++v) {
        if (seen[v] || (!removed.empty() && removed[v]) || !(g.a[u][v] || g.a[v][u])) continue;
        seen[v] = true;
        f.parent[v] = u;
        f.depth[v] = f.depth[u] + 1;
        comp.push_back(v);
      }
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

WeightedElements edge_elements(const GraphInstance& g) {
  const bool directed = g.header.directed;
  auto a = final_matrix(g);
  WeightedElements out;
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = directed ? 1 : u + 1; v <= g.n(); ++v)
      if (a[u][v] != 0) out.emplace_back(edge_index(u, v, g.n(), directed), a[u][v]);
  return out;
}

std::uint64_t edge_universe(std::uint32_t n) { return static_cast<std::uint64_t>(n) * n; }

DegreeBounds set_bounds(std::uint64_t universe, std::uint32_t vdim) {
  return {static_cast<std::uint32_t>(2 * (set_scheme_h(universe, vdim) - 1))};
}

void add_set_poly(ProofTranscript& t, const std::string& label, const FieldConfig& f, std::uint64_t universe,
                  std::uint32_t vdim, const WeightedElements& s, const WeightedElements& tt) {
  t.add_coefficients(label, set_bounds(universe, vdim), set_scheme_poly(f, universe, vdim, s, tt));
}

void add_induced_poly(ProofTranscript& t, const std::string& label, const FieldConfig& f, const GraphInstance& g,
                      const ShapeConfig& inner, const std::vector<std::vector<Vertex>>& sets) {
  t.add_coefficients(label, edgecount_bounds(inner),
                     edgecount_poly(f, inner, comembership(f, g.n(), sets), adjacency_matrix(f, g)));
}

Block& block_named(ProofTranscript& t, const std::string& label) {
  for (auto& b : t.blocks())
    if (b.label == label) return b;
  throw std::logic_error("no block '" + label + "'");
}

// Moves the grid sum of a set-scheme block by delta.
void shift_set_block(ProofTranscript& t, const std::string& label, const FieldConfig& f, std::int64_t delta,
                     Rng& rng) {
  Block& b = block_named(t, label);
  mutate::shift_block_sum(b, f, {&LagrangeDomain::get(f, b.bounds[0] / 2 + 1)}, f(delta), rng);
}

void shift_count_block(ProofTranscript& t, const std::string& label, const FieldConfig& f, std::int64_t delta,
                       Rng& rng) {
  Block& b = block_named(t, label);
  mutate::shift_block_sum(b, f, doubled_degree_domains(f, b), f(delta), rng);
}

std::vector<std::uint64_t> as_items(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

void require_simple(const GraphInstance& g, bool directed, const std::string& name) {
  if (g.header.model != StreamModel::vanilla) throw ConfigError(name + " needs a vanilla edge stream");
  if (g.header.directed != directed)
    throw ConfigError(name + (directed ? " needs a directed graph" : " needs an undirected graph"));
  auto a = final_matrix(g);
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = 1; v <= g.n(); ++v)
      if (a[u][v] > 1) throw ConfigError(name + " needs a simple graph");
}

// ---------------------------------------------------------------- Verifier-side helpers

// Multiset fingerprint over vertex ids, compared against V = {1..n} at the end.
class VertexCover {
 public:
  VertexCover(const FieldConfig& f, Rng& rng, SpaceMeter& m) : f_(&f), lease_(m, 2), fp_(rng.fe_random(f)) {}
  void add(Vertex v) { fp_.update(v, f_->one()); }
  bool is_vertex_set(std::uint32_t n) const {
    Fe expect = f_->zero(), power = f_->one();
    for (std::uint32_t v = 1; v <= n; ++v) {
      power *= fp_.point();
      expect += power;
    }
    return expect == fp_.value();
  }

 private:
  const FieldConfig* f_;
  Lease lease_;
  Fingerprint fp_;
};

template <class Fn>
void for_each_pair(const Block& b, std::uint32_t n, Fn fn) {
  if (b.items.size() % 2 != 0) throw Rejection("'" + b.label + "' has an unpaired entry");
  for (std::size_t i = 0; i < b.items.size(); i += 2)
    fn(read_vertex(b.items[i], n, b.label), read_vertex(b.items[i + 1], n, b.label));
}

std::uint64_t set_hcost(std::uint64_t universe, std::uint32_t vdim) { return 2 * set_scheme_h(universe, vdim) - 1; }
std::uint64_t count_hcost(const ShapeConfig& inner) { return (2ULL * inner.t - 1) * (2ULL * inner.t - 1); }
std::uint64_t table_words(const ShapeConfig& inner) { return static_cast<std::uint64_t>(inner.s) * inner.s + 2; }

}  // namespace

int max_matching_size(const DenseGraph& g, const std::vector<bool>& removed) {
  auto mate = maximum_matching(g, removed);
  int k = 0;
  for (Vertex v = 1; v <= g.n; ++v) k += mate[v] > v;
  return k;
}

MatchingCertificate tutte_berge_certificate(const DenseGraph& g) {
  MatchingCertificate c;
  auto mate = maximum_matching(g, {});
  for (Vertex v = 1; v <= g.n; ++v)
    if (mate[v] > v) c.matching.emplace_back(v, mate[v]);
  // D: vertices missed by some maximum matching; the barrier is N(D) \ D.
  const int k = static_cast<int>(c.matching.size());
  std::vector<bool> in_d(g.n + 1, false), removed(g.n + 1, false);
  for (Vertex v = 1; v <= g.n; ++v) {
    removed[v] = true;
    in_d[v] = max_matching_size(g, removed) == k;
    removed[v] = false;
  }
  std::vector<bool> barrier(g.n + 1, false);
  for (Vertex v = 1; v <= g.n; ++v) {
    if (in_d[v]) continue;
    for (Vertex u = 1; u <= g.n && !barrier[v]; ++u) barrier[v] = in_d[u] && g.a[u][v];
    if (barrier[v]) c.ustar.push_back(v);
  }
  c.components = bfs_forest(g, barrier).components;
  return c;
}

ShapeConfig inner_shape(const SchemeParams& p, std::uint32_t n) {
  const SchemeParams r = resolve_params(p, n);
  const auto s = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::sqrt(static_cast<double>(r.s))));
  return ShapeConfig(n, (n + s - 1) / s, s);
}

namespace {

// ---------------------------------------------------------------- maxmatch-frugal

ProofTranscript frugal_matching_proof(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                      const MatchingCertificate& c) {
  const std::uint32_t n = g.n();
  const SchemeParams r = resolve_params(p, n);
  std::vector<bool> matched(n + 1, false);
  std::vector<std::uint64_t> pairs, unmatched, comps;
  WeightedElements s;
  for (auto [u, v] : c.matching) {
    pairs.push_back(u);
    pairs.push_back(v);
    matched[u] = matched[v] = true;
    s.emplace_back(edge_index(u, v, n, false), 1);
  }
  for (Vertex v = 1; v <= n; ++v)
    if (!matched[v]) unmatched.push_back(v);
  std::vector<Vertex> vh;
  for (const auto& comp : c.components) {
    for (auto v : comp) {
      comps.push_back(v);
      vh.push_back(v);
    }
    comps.push_back(kDelimiter);
  }
  ProofTranscript t(f.modulus());
  t.add_vertices("matching", std::move(pairs));
  t.add_vertices("unmatched", std::move(unmatched));
  t.add_vertices("ustar", as_items(c.ustar));
  t.add_vertices("components", std::move(comps));
  add_set_poly(t, "matched-edges", f, edge_universe(n), r.s, s, edge_elements(g));
  const ShapeConfig inner = inner_shape(p, n);
  add_induced_poly(t, "m1", f, g, inner, {vh});
  add_induced_poly(t, "m2", f, g, inner, c.components);
  return t;
}

class FrugalMatchingVerifier : public Verifier {
 public:
  FrugalMatchingVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng,
                         SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        table_(f, inner_shape(p, h.n), false, rng, m),
        m1_(table_, false, m),
        m2_(table_, false, m),
        edges_(f, edge_universe(h.n), resolve_params(p, h.n).s, rng, m),
        cover_(f, rng, m),
        part_(f, rng, m),
        k_(m, 0),
        ustar_(m, 0),
        odd_(m, 0),
        cur_(m, 0) {}

  void consume(const StreamToken& tok) override {
    table_.update(tok.u, tok.v, f_->one());
    edges_.add_t(edge_index(tok.u, tok.v, n_, false), f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    for_each_pair(proof.expect(BlockKind::vertex_list, "matching"), n_, [&](Vertex u, Vertex v) {
      ++*k_;
      edges_.add_s(edge_index(u, v, n_, false), f_->one());
      cover_.add(u);
      cover_.add(v);
    });
    for (auto item : proof.expect(BlockKind::vertex_list, "unmatched").items)
      cover_.add(read_vertex(item, n_, "unmatched"));
    if (!cover_.is_vertex_set(n_)) throw Rejection("matching endpoints and unmatched vertices do not partition V");
    for (auto item : proof.expect(BlockKind::vertex_list, "ustar").items) {
      part_.add(read_vertex(item, n_, "ustar"));
      ++*ustar_;
    }
    for (auto item : proof.expect(BlockKind::vertex_list, "components").items) {
      if (item == kDelimiter) {
        if (*cur_ == 0) throw Rejection("empty component");
        m2_.end_set();
        *odd_ += *cur_ % 2;
        *cur_ = 0;
        continue;
      }
      Vertex v = read_vertex(item, n_, "components");
      part_.add(v);
      m1_.add_vertex(v);
      m2_.add_vertex(v);
      ++*cur_;
    }
    if (*cur_ != 0) throw Rejection("unterminated component");
    m1_.end_set();
    if (!part_.is_vertex_set(n_)) throw Rejection("ustar and components do not partition V");
    if (edges_.finish(proof.expect(BlockKind::coefficients, "matched-edges")) != f_->from_u64(*k_))
      throw Rejection("matching uses a non-edge");
    Fe m1 = m1_.finish(proof.expect(BlockKind::coefficients, "m1"));
    Fe m2 = m2_.finish(proof.expect(BlockKind::coefficients, "m2"));
    if (m1 != m2) throw Rejection("claimed components are joined by an edge");
    if (2 * *k_ != *ustar_ + n_ - *odd_) throw Rejection("Tutte-Berge count does not balance");
    return {static_cast<std::int64_t>(*k_), {}};
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  EdgeTable table_;
  EdgeCounter m1_, m2_;
  SetSchemeVerifier edges_;
  VertexCover cover_, part_;
  Cell<std::uint64_t> k_, ustar_, odd_, cur_;
};

// Drops one matching edge and splits a component so the count still balances at k-1.
bool understate_matching(MatchingCertificate& c) {
  if (c.matching.empty()) return false;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    auto& comp = c.components[i];
    const std::size_t cut = comp.size() % 2 == 0 ? 1 : 2;
    if (comp.size() < cut + 1) continue;
    std::vector<Vertex> tail(comp.end() - static_cast<std::ptrdiff_t>(cut), comp.end());
    comp.resize(comp.size() - cut);
    for (auto v : tail) c.components.push_back({v});
    c.matching.pop_back();
    return true;
  }
  return false;
}

std::vector<Vertex> vertices_of(const std::vector<std::vector<Vertex>>& comps) {
  std::vector<Vertex> out;
  for (const auto& c : comps) out.insert(out.end(), c.begin(), c.end());
  return out;
}

class MaxMatchFrugal : public Scheme {
 public:
  std::string name() const override { return "maxmatch-frugal"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, false, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    return frugal_matching_proof(g, p, f, tutte_berge_certificate(DenseGraph::from_instance(g)));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<FrugalMatchingVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::matching(DenseGraph::from_instance(g)), {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const std::uint32_t n = g.n();
    const std::uint64_t s = resolve_params(p, n).s;
    const ShapeConfig in = inner_shape(p, n);
    return {3ULL * n + set_hcost(edge_universe(n), s) + 2 * count_hcost(in),
            table_words(in) + 2 * (2ULL * in.s + 1) + (2 * s + 1) + 4 + 4};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("split-component", [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                              Rng& rng) {
              auto dg = DenseGraph::from_instance(g);
              auto c = tutte_berge_certificate(dg);
              if (!understate_matching(c)) return frugal_matching_proof(g, p, f, c);
              auto t = frugal_matching_proof(g, p, f, c);
              const std::int64_t gap = oracle::induced_edges(dg, {vertices_of(c.components)}) -
                                       oracle::induced_edges(dg, c.components);
              shift_count_block(t, "m2", f, 2 * gap, rng);
              return t;
            })};
  }
};

// ---------------------------------------------------------------- maxmatch-laconic

struct LaconicLayout {
  std::uint32_t vdim;
  std::uint64_t universe;
};

LaconicLayout laconic_layout(const SchemeParams& p, std::uint32_t n) {
  return {n * resolve_params(p, n).s, edge_universe(n)};
}

struct LaconicCertificate {
  std::vector<std::pair<Vertex, Vertex>> matching;
  std::vector<Vertex> ustar;
  std::vector<std::pair<Vertex, Vertex>> forest;
};

LaconicCertificate laconic_certificate(const DenseGraph& g) {
  auto c = tutte_berge_certificate(g);
  std::vector<bool> removed(g.n + 1, false);
  for (auto v : c.ustar) removed[v] = true;
  auto f = bfs_forest(g, removed);
  LaconicCertificate out{c.matching, c.ustar, {}};
  for (const auto& comp : f.components)
    for (std::size_t i = 1; i < comp.size(); ++i) out.forest.emplace_back(f.parent[comp[i]], comp[i]);
  return out;
}

// Undirected pairs {a,b} of V(H) that the forest leaves in different trees.
WeightedElements forest_cross_pairs(std::uint32_t n, const LaconicCertificate& c) {
  std::vector<Vertex> root(n + 1);
  for (Vertex v = 0; v <= n; ++v) root[v] = v;
  auto find = [&](Vertex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [a, b] : c.forest) root[find(a)] = find(b);
  std::vector<bool> barrier(n + 1, false);
  for (auto v : c.ustar) barrier[v] = true;
  WeightedElements out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (!barrier[a] && !barrier[b] && find(a) != find(b)) out.emplace_back(edge_index(a, b, n, false), 1);
  return out;
}

ProofTranscript laconic_matching_proof(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                       const LaconicCertificate& c) {
  const std::uint32_t n = g.n();
  const auto lay = laconic_layout(p, n);
  std::vector<std::uint64_t> pairs, forest;
  WeightedElements used;
  for (auto [u, v] : c.matching) {
    pairs.push_back(u);
    pairs.push_back(v);
    used.emplace_back(edge_index(u, v, n, false), 1);
  }
  for (auto [a, b] : c.forest) {
    forest.push_back(a);
    forest.push_back(b);
    used.emplace_back(edge_index(a, b, n, false), 1);
  }
  const auto edges = edge_elements(g);
  ProofTranscript t(f.modulus());
  t.add_vertices("matching", std::move(pairs));
  t.add_vertices("ustar", as_items(c.ustar));
  t.add_vertices("forest", std::move(forest));
  add_set_poly(t, "used-edges", f, lay.universe, lay.vdim, used, edges);
  add_set_poly(t, "cross-edges", f, lay.universe, lay.vdim, forest_cross_pairs(n, c), edges);
  return t;
}

class LaconicMatchingVerifier : public Verifier {
 public:
  LaconicMatchingVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng,
                          SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        used_(f, laconic_layout(p, h.n).universe, laconic_layout(p, h.n).vdim, rng, m),
        cross_(f, laconic_layout(p, h.n).universe, laconic_layout(p, h.n).vdim, rng, m),
        role_(m, h.n + 1, 0),
        tree_(m, h.n + 1, -1),
        k_(m, 0),
        ustar_(m, 0),
        forest_(m, 0) {}

  void consume(const StreamToken& tok) override {
    const auto idx = edge_index(tok.u, tok.v, n_, false);
    used_.add_t(idx, f_->one());
    cross_.add_t(idx, f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    for_each_pair(proof.expect(BlockKind::vertex_list, "matching"), n_, [&](Vertex u, Vertex v) {
      if ((role_[u] & kMatched) || (role_[v] & kMatched) || u == v) throw Rejection("matching reuses a vertex");
      role_[u] |= kMatched;
      role_[v] |= kMatched;
      ++*k_;
      used_.add_s(edge_index(u, v, n_, false), f_->one());
    });
    for (auto item : proof.expect(BlockKind::vertex_list, "ustar").items) {
      Vertex v = read_vertex(item, n_, "ustar");
      if (role_[v] & kBarrier) throw Rejection("ustar lists a vertex twice");
      role_[v] |= kBarrier;
      ++*ustar_;
    }
    for_each_pair(proof.expect(BlockKind::vertex_list, "forest"), n_, [&](Vertex a, Vertex b) {
      if ((role_[a] & kBarrier) || (role_[b] & kBarrier)) throw Rejection("forest edge touches ustar");
      Vertex ra = find(a), rb = find(b);
      if (ra == rb) throw Rejection("forest has a cycle");
      if (tree_[ra] > tree_[rb]) std::swap(ra, rb);
      tree_[ra] += tree_[rb];
      tree_[rb] = ra;
      ++*forest_;
      used_.add_s(edge_index(a, b, n_, false), f_->one());
    });
    std::uint64_t odd = 0;
    for (Vertex a = 1; a <= n_; ++a) {
      if (role_[a] & kBarrier) continue;
      if (tree_[a] < 0 && (-tree_[a]) % 2 == 1) ++odd;
      for (Vertex b = a + 1; b <= n_; ++b)
        if (!(role_[b] & kBarrier) && find(a) != find(b)) cross_.add_s(edge_index(a, b, n_, false), f_->one());
    }
    if (used_.finish(proof.expect(BlockKind::coefficients, "used-edges")) != f_->from_u64(*k_ + *forest_))
      throw Rejection("matching or forest uses a non-edge");
    if (!cross_.finish(proof.expect(BlockKind::coefficients, "cross-edges")).is_zero())
      throw Rejection("an edge joins two forest components");
    if (2 * *k_ != *ustar_ + n_ - odd) throw Rejection("Tutte-Berge count does not balance");
    return {static_cast<std::int64_t>(*k_), {}};
  }

 private:
  static constexpr std::uint8_t kMatched = 1, kBarrier = 2;

  Vertex find(Vertex x) {
    while (tree_[x] >= 0) {
      if (tree_[tree_[x]] >= 0) tree_[x] = tree_[tree_[x]];
      x = static_cast<Vertex>(tree_[x]);
    }
    return x;
  }

  const FieldConfig* f_;
  std::uint32_t n_;
  SetSchemeVerifier used_, cross_;
  MeteredVec<std::uint8_t> role_;
  MeteredVec<std::int64_t> tree_;  // parent, or minus the tree size at a root
  Cell<std::uint64_t> k_, ustar_, forest_;
};

// Drops one matching edge and a forest edge that splits an even tree into two odd ones.
bool understate_laconic(const DenseGraph& g, LaconicCertificate& c) {
  if (c.matching.empty()) return false;
  for (std::size_t i = 0; i < c.forest.size(); ++i) {
    auto rest = c.forest;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    LaconicCertificate trial{c.matching, c.ustar, rest};
    // Tree sizes after the cut, via the same union-find as the cross pairs.
    std::vector<Vertex> root(g.n + 1);
    for (Vertex v = 0; v <= g.n; ++v) root[v] = v;
    auto find = [&](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (auto [a, b] : rest) root[find(a)] = find(b);
    std::vector<int> size(g.n + 1, 0);
    for (Vertex v = 1; v <= g.n; ++v) ++size[find(v)];
    auto [a, b] = c.forest[i];
    if (size[find(a)] % 2 == 1 && size[find(b)] % 2 == 1) {
      trial.matching.pop_back();
      c = trial;
      return true;
    }
  }
  return false;
}

class MaxMatchLaconic : public Scheme {
 public:
  std::string name() const override { return "maxmatch-laconic"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, false, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    return laconic_matching_proof(g, p, f, laconic_certificate(DenseGraph::from_instance(g)));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<LaconicMatchingVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::matching(DenseGraph::from_instance(g)), {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const std::uint32_t n = g.n();
    const auto lay = laconic_layout(p, n);
    return {3ULL * n + 2 * set_hcost(lay.universe, lay.vdim), 2ULL * (n + 1) + 2 * (2ULL * lay.vdim + 1) + 3};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("split-forest", [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                           Rng& rng) {
              auto dg = DenseGraph::from_instance(g);
              auto c = laconic_certificate(dg);
              if (!understate_laconic(dg, c)) return laconic_matching_proof(g, p, f, c);
              auto t = laconic_matching_proof(g, p, f, c);
              std::int64_t crossing = 0;
              for (auto [idx, w] : forest_cross_pairs(g.n(), c)) {
                Vertex a = static_cast<Vertex>((idx - 1) / g.n() + 1), b = static_cast<Vertex>((idx - 1) % g.n() + 1);
                crossing += w * dg.a[a][b];
              }
              shift_set_block(t, "cross-edges", f, -crossing, rng);
              return t;
            })};
  }
};

// ---------------------------------------------------------------- mis

struct MisCertificate {
  std::vector<Vertex> members;
  std::vector<std::pair<Vertex, Vertex>> pointers;  // (v, neighbor of v in the set)
};

MisCertificate greedy_mis(const DenseGraph& g) {
  MisCertificate c;
  std::vector<Vertex> owner(g.n + 1, 0);
  for (Vertex v = 1; v <= g.n; ++v) {
    if (owner[v]) continue;
    c.members.push_back(v);
    for (Vertex w = 1; w <= g.n; ++w)
      if (g.a[v][w] && !owner[w]) owner[w] = v;
    owner[v] = v;
  }
  for (Vertex v = 1; v <= g.n; ++v)
    if (owner[v] != v) c.pointers.emplace_back(v, owner[v]);
  return c;
}

ProofTranscript mis_proof(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                          const MisCertificate& c) {
  const std::uint32_t n = g.n();
  const std::uint32_t s = resolve_params(p, n).s;
  std::vector<std::uint64_t> ptrs;
  WeightedElements ptr_edges, partners, members;
  for (auto [v, u] : c.pointers) {
    ptrs.push_back(v);
    ptrs.push_back(u);
    ptr_edges.emplace_back(edge_index(v, u, n, false), 1);
    partners.emplace_back(u, 1);
  }
  for (auto v : c.members) members.emplace_back(v, 1);
  ProofTranscript t(f.modulus());
  t.add_vertices("mis", as_items(c.members));
  t.add_vertices("pointers", std::move(ptrs));
  add_set_poly(t, "pointer-edges", f, edge_universe(n), s, ptr_edges, edge_elements(g));
  add_set_poly(t, "partners", f, n, s, partners, members);
  add_induced_poly(t, "independent", f, g, inner_shape(p, n), {c.members});
  return t;
}

class MisVerifier : public Verifier {
 public:
  MisVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        table_(f, inner_shape(p, h.n), false, rng, m),
        inside_(table_, false, m),
        edges_(f, edge_universe(h.n), resolve_params(p, h.n).s, rng, m),
        partners_(f, h.n, resolve_params(p, h.n).s, rng, m),
        cover_(f, rng, m),
        size_(m, 0),
        ptrs_(m, 0) {}

  void consume(const StreamToken& tok) override {
    table_.update(tok.u, tok.v, f_->one());
    edges_.add_t(edge_index(tok.u, tok.v, n_, false), f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    Accepted out{0, std::vector<std::int64_t>(n_ + 1, 0)};
    for (auto item : proof.expect(BlockKind::vertex_list, "mis").items) {
      Vertex v = read_vertex(item, n_, "mis");
      cover_.add(v);
      inside_.add_vertex(v);
      partners_.add_t(v, f_->one());
      ++*size_;
      out.labels[v] = 1;
    }
    inside_.end_set();
    for_each_pair(proof.expect(BlockKind::vertex_list, "pointers"), n_, [&](Vertex v, Vertex u) {
      cover_.add(v);
      edges_.add_s(edge_index(v, u, n_, false), f_->one());
      partners_.add_s(u, f_->one());
      ++*ptrs_;
    });
    if (!cover_.is_vertex_set(n_)) throw Rejection("set and pointer sources do not partition V");
    const Fe count = f_->from_u64(*ptrs_);
    if (edges_.finish(proof.expect(BlockKind::coefficients, "pointer-edges")) != count)
      throw Rejection("a pointer is not an edge");
    if (partners_.finish(proof.expect(BlockKind::coefficients, "partners")) != count)
      throw Rejection("a pointer leads outside the set");
    if (!inside_.finish(proof.expect(BlockKind::coefficients, "independent")).is_zero())
      throw Rejection("set is not independent");
    out.value = static_cast<std::int64_t>(*size_);
    return out;
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  EdgeTable table_;
  EdgeCounter inside_;
  SetSchemeVerifier edges_, partners_;
  VertexCover cover_;
  Cell<std::uint64_t> size_, ptrs_;
};

class Mis : public Scheme {
 public:
  std::string name() const override { return "mis"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, false, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    return mis_proof(g, p, f, greedy_mis(DenseGraph::from_instance(g)));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<MisVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto c = greedy_mis(DenseGraph::from_instance(g));
    Accepted a{static_cast<std::int64_t>(c.members.size()), std::vector<std::int64_t>(g.n() + 1, 0)};
    for (auto v : c.members) a.labels[v] = 1;
    return a;
  }
  // Any maximal independent set is a correct answer.
  bool matches_oracle(const GraphInstance& g, const Accepted& out) const override {
    if (out.labels.size() != g.n() + 1) return false;
    std::vector<Vertex> u;
    for (Vertex v = 1; v <= g.n(); ++v)
      if (out.labels[v]) u.push_back(v);
    return out.value == static_cast<std::int64_t>(u.size()) &&
           oracle::mis_check(DenseGraph::from_instance(g), u);
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const std::uint32_t n = g.n();
    const std::uint32_t s = resolve_params(p, n).s;
    const ShapeConfig in = inner_shape(p, n);
    return {2ULL * n + set_hcost(edge_universe(n), s) + set_hcost(n, s) + count_hcost(in),
            table_words(in) + (2ULL * in.s + 1) + 2 * (2ULL * s + 1) + 2 + 2};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("add-neighbor",
                        [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng) {
                          auto dg = DenseGraph::from_instance(g);
                          auto c = greedy_mis(dg);
                          if (c.pointers.empty()) return mis_proof(g, p, f, c);
                          auto pick = rng.below(c.pointers.size());
                          c.members.push_back(c.pointers[pick].first);
                          c.pointers.erase(c.pointers.begin() + static_cast<std::ptrdiff_t>(pick));
                          auto t = mis_proof(g, p, f, c);
                          shift_count_block(t, "independent", f, -2 * oracle::induced_edges(dg, {c.members}), rng);
                          return t;
                        }),
            mutate::lie("drop-member",
                        [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng) {
                          auto dg = DenseGraph::from_instance(g);
                          auto c = greedy_mis(dg);
                          if (c.members.size() < 2) return mis_proof(g, p, f, c);
                          // u has no neighbor left in the set, so its pointer names a non-edge.
                          Vertex u = c.members.back();
                          c.members.pop_back();
                          c.pointers.emplace_back(u, c.members.front());
                          auto t = mis_proof(g, p, f, c);
                          shift_set_block(t, "pointer-edges", f, 1, rng);
                          return t;
                        })};
  }
};

// ---------------------------------------------------------------- toposort and acyclicity

std::vector<Vertex> dfs_topological_order(const DenseGraph& g) {
  std::vector<int> state(g.n + 1, 0);
  std::vector<Vertex> post;
  for (Vertex root = 1; root <= g.n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<Vertex, Vertex>> stack{{root, 1}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      while (next <= g.n && (state[next] || !g.a[u][next])) ++next;
      if (next > g.n) {
        post.push_back(u);
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      Vertex v = next++;
      state[v] = 1;
      stack.emplace_back(v, 1);
    }
  }
  std::reverse(post.begin(), post.end());
  return post;
}

// A directed cycle as a vertex sequence, if one exists.
std::optional<std::vector<Vertex>> find_cycle(const DenseGraph& g) {
  std::vector<int> state(g.n + 1, 0);
  std::vector<Vertex> parent(g.n + 1, 0);
  for (Vertex root = 1; root <= g.n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<Vertex, Vertex>> stack{{root, 1}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      while (next <= g.n && (state[next] == 2 || !g.a[u][next])) ++next;
      if (next > g.n) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      Vertex v = next++;
      if (state[v] == 1) {
        std::vector<Vertex> cyc{u};
        for (Vertex w = u; w != v;) cyc.push_back(w = parent[w]);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      parent[v] = u;
      state[v] = 1;
      stack.emplace_back(v, 1);
    }
  }
  return std::nullopt;
}

void add_order_proof(ProofTranscript& t, const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                     const std::vector<Vertex>& order) {
  const std::uint32_t n = g.n();
  FeMatrix before(n + 1, std::vector<Fe>(n + 1, f.zero()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) before[order[i]][order[j]] = f.one();
  const ShapeConfig inner = inner_shape(p, n);
  t.add_vertices("order", as_items(order));
  t.add_coefficients("forward", edgecount_bounds(inner), edgecount_poly(f, inner, before, adjacency_matrix(f, g)));
}

std::int64_t forward_arcs(const DenseGraph& g, const std::vector<Vertex>& order) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) c += g.a[order[i]][order[j]];
  return c;
}

// Forward-arc count of a claimed order, via CrossEdgeCount on U_i = {v_1..v_i}, W_i = {v_{i+1}}.
class OrderCheck {
 public:
  OrderCheck(const FieldConfig& f, const ShapeConfig& inner, Rng& rng, SpaceMeter& m)
      : f_(&f), n_(inner.n), table_(f, inner, true, rng, m), counter_(table_, true, m), arcs_(m, 0), seen_(m, 0) {}

  void arc(Vertex u, Vertex v) {
    table_.update(u, v, f_->one());
    ++*arcs_;
  }

  // Reads the order; returns it as labels indexed by position.
  std::vector<std::int64_t> check(TranscriptReader& proof, VertexCover& cover) {
    std::vector<std::int64_t> labels{0};
    for (auto item : proof.expect(BlockKind::vertex_list, "order").items) {
      Vertex v = read_vertex(item, n_, "order");
      cover.add(v);
      if (*seen_ > 0) {
        counter_.add_vertex(v, 1);
        counter_.end_set(true);
      }
      counter_.add_vertex(v, 0);
      ++*seen_;
      labels.push_back(v);
    }
    if (*seen_ != n_ || !cover.is_vertex_set(n_)) throw Rejection("order is not a permutation of V");
    if (counter_.finish(proof.expect(BlockKind::coefficients, "forward")) != f_->from_u64(*arcs_))
      throw Rejection("some arc points backward in the order");
    return labels;
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  EdgeTable table_;
  EdgeCounter counter_;
  Cell<std::uint64_t> arcs_, seen_;
};

std::uint64_t order_words(const ShapeConfig& in) { return table_words(in) + (4ULL * in.s + 1) + 2; }

class ToposortVerifier : public Verifier {
 public:
  ToposortVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : order_(f, inner_shape(p, h.n), rng, m), cover_(f, rng, m) {}
  void consume(const StreamToken& tok) override { order_.arc(tok.u, tok.v); }
  Accepted finish(TranscriptReader& proof) override { return {1, order_.check(proof, cover_)}; }

 private:
  OrderCheck order_;
  VertexCover cover_;
};

bool is_order_output(const GraphInstance& g, const Accepted& out) {
  if (out.value != 1 || out.labels.size() != g.n() + 1) return false;
  std::vector<Vertex> order(out.labels.begin() + 1, out.labels.end());
  return oracle::is_topological_order(DenseGraph::from_instance(g), order);
}

// Swaps a consecutive pair joined by an arc and restores the forward count by shifting the sum.
ProofTranscript backward_order_lie(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng,
                                   ProofTranscript t) {
  auto dg = DenseGraph::from_instance(g);
  auto order = dfs_topological_order(dg);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!dg.a[order[i]][order[i + 1]]) continue;
    std::swap(order[i], order[i + 1]);
    add_order_proof(t, g, p, f, order);
    shift_count_block(t, "forward", f, dg.edge_count() - forward_arcs(dg, order), rng);
    return t;
  }
  add_order_proof(t, g, p, f, order);
  return t;
}

class Toposort : public Scheme {
 public:
  std::string name() const override { return "toposort"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, true, name());
    if (find_cycle(DenseGraph::from_instance(g))) throw ConfigError("toposort needs an acyclic graph");
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    ProofTranscript t(f.modulus());
    add_order_proof(t, g, p, f, dfs_topological_order(DenseGraph::from_instance(g)));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<ToposortVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto order = oracle::toposort(DenseGraph::from_instance(g));
    Accepted a{1, {0}};
    for (auto v : *order) a.labels.push_back(v);
    return a;
  }
  // Any topological order is a correct answer.
  bool matches_oracle(const GraphInstance& g, const Accepted& out) const override { return is_order_output(g, out); }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const ShapeConfig in = inner_shape(p, g.n());
    return {g.n() + count_hcost(in), order_words(in) + 2};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("backward-arc", [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                           Rng& rng) { return backward_order_lie(g, p, f, rng, ProofTranscript(f.modulus())); })};
  }
};

ProofTranscript cycle_proof(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                            const std::vector<Vertex>& cycle) {
  const std::uint32_t n = g.n();
  std::vector<bool> on(n + 1, false);
  WeightedElements arcs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    on[cycle[i]] = true;
    arcs.emplace_back(edge_index(cycle[i], cycle[(i + 1) % cycle.size()], n, true), 1);
  }
  std::vector<std::uint64_t> others;
  for (Vertex v = 1; v <= n; ++v)
    if (!on[v]) others.push_back(v);
  ProofTranscript t(f.modulus());
  t.add_scalars("verdict", std::vector<std::uint64_t>{0});
  t.add_vertices("cycle", as_items(cycle));
  t.add_vertices("others", std::move(others));
  add_set_poly(t, "cycle-arcs", f, edge_universe(n), resolve_params(p, n).s, arcs, edge_elements(g));
  return t;
}

class AcyclicityVerifier : public Verifier {
 public:
  AcyclicityVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        order_(f, inner_shape(p, h.n), rng, m),
        arcs_(f, edge_universe(h.n), resolve_params(p, h.n).s, rng, m),
        cover_(f, rng, m),
        first_(m, 0),
        prev_(m, 0),
        len_(m, 0) {}

  void consume(const StreamToken& tok) override {
    order_.arc(tok.u, tok.v);
    arcs_.add_t(edge_index(tok.u, tok.v, n_, true), f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    const Block& verdict = proof.expect(BlockKind::scalar_list, "verdict");
    if (verdict.items.size() != 1 || verdict.items[0] > 1) throw Rejection("verdict must be a single 0 or 1");
    if (verdict.items[0] == 1) {
      order_.check(proof, cover_);
      return {1, {}};
    }
    for (auto item : proof.expect(BlockKind::vertex_list, "cycle").items) {
      Vertex v = read_vertex(item, n_, "cycle");
      cover_.add(v);
      if (*len_ == 0) *first_ = v;
      else arcs_.add_s(edge_index(*prev_, v, n_, true), f_->one());
      *prev_ = v;
      ++*len_;
    }
    if (*len_ < 2) throw Rejection("cycle needs at least two vertices");
    arcs_.add_s(edge_index(*prev_, *first_, n_, true), f_->one());
    for (auto item : proof.expect(BlockKind::vertex_list, "others").items) cover_.add(read_vertex(item, n_, "others"));
    if (!cover_.is_vertex_set(n_)) throw Rejection("cycle repeats a vertex");
    if (arcs_.finish(proof.expect(BlockKind::coefficients, "cycle-arcs")) != f_->from_u64(*len_))
      throw Rejection("cycle uses a non-arc");
    return {0, {}};
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  OrderCheck order_;
  SetSchemeVerifier arcs_;
  VertexCover cover_;
  Cell<Vertex> first_, prev_;
  Cell<std::uint64_t> len_;
};

class Acyclicity : public Scheme {
 public:
  std::string name() const override { return "acyclicity"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, true, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    auto dg = DenseGraph::from_instance(g);
    if (auto cyc = find_cycle(dg)) return cycle_proof(g, p, f, *cyc);
    ProofTranscript t(f.modulus());
    t.add_scalars("verdict", std::vector<std::uint64_t>{1});
    add_order_proof(t, g, p, f, dfs_topological_order(dg));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<AcyclicityVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::acyclic(DenseGraph::from_instance(g)) ? 1 : 0, {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const std::uint32_t n = g.n();
    const std::uint32_t s = resolve_params(p, n).s;
    const ShapeConfig in = inner_shape(p, n);
    return {1ULL + n + count_hcost(in) + set_hcost(edge_universe(n), s),
            order_words(in) + (2ULL * s + 1) + 2 + 3};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            // On a DAG: an arc closed into a cycle by a reverse non-arc.
            mutate::lie("fake-cycle",
                        [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng) {
                          auto dg = DenseGraph::from_instance(g);
                          for (Vertex u = 1; u <= g.n(); ++u)
                            for (Vertex v = 1; v <= g.n(); ++v)
                              if (dg.a[u][v] && !dg.a[v][u]) {
                                auto t = cycle_proof(g, p, f, {u, v});
                                shift_set_block(t, "cycle-arcs", f, 1, rng);
                                return t;
                              }
                          return Acyclicity().prove(g, p, f);
                        }),
            // On a cyclic graph: the identity order with its forward count shifted up to m.
            mutate::lie("fake-order",
                        [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng) {
                          auto dg = DenseGraph::from_instance(g);
                          if (!find_cycle(dg)) return Acyclicity().prove(g, p, f);
                          std::vector<Vertex> order(g.n());
                          for (Vertex v = 1; v <= g.n(); ++v) order[v - 1] = v;
                          ProofTranscript t(f.modulus());
                          t.add_scalars("verdict", std::vector<std::uint64_t>{1});
                          add_order_proof(t, g, p, f, order);
                          shift_count_block(t, "forward", f, dg.edge_count() - forward_arcs(dg, order), rng);
                          return t;
                        })};
  }
};

// ---------------------------------------------------------------- components

struct TreeEntry {
  Vertex v;
  Vertex parent;  // 0 at the root
  std::uint32_t depth;
};
using TreeCertificate = std::vector<std::vector<TreeEntry>>;

TreeCertificate spanning_trees(const DenseGraph& g) {
  auto f = bfs_forest(g, {});
  TreeCertificate out;
  for (const auto& comp : f.components) {
    std::vector<TreeEntry> tree;
    for (auto v : comp) tree.push_back({v, f.parent[v], f.depth[v]});
    out.push_back(std::move(tree));
  }
  return out;
}

std::uint64_t depth_index(Vertex v, std::uint32_t depth, std::uint32_t n) {
  return static_cast<std::uint64_t>(depth) * n + v;
}

ProofTranscript components_proof(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                 const TreeCertificate& c) {
  const std::uint32_t n = g.n();
  const std::uint32_t s = resolve_params(p, n).s;
  std::vector<std::uint64_t> items;
  WeightedElements tree_edges, parents, entries;
  std::vector<std::vector<Vertex>> sets;
  for (const auto& tree : c) {
    sets.emplace_back();
    for (const auto& e : tree) {
      items.insert(items.end(), {e.v, e.parent, e.depth});
      sets.back().push_back(e.v);
      entries.emplace_back(depth_index(e.v, e.depth, n), 1);
      if (e.parent == 0) continue;
      tree_edges.emplace_back(edge_index(e.v, e.parent, n, false), 1);
      parents.emplace_back(depth_index(e.parent, e.depth - 1, n), 1);
    }
    items.push_back(kDelimiter);
  }
  ProofTranscript t(f.modulus());
  t.add_scalars("forest", std::move(items));
  add_set_poly(t, "tree-edges", f, edge_universe(n), s, tree_edges, edge_elements(g));
  add_set_poly(t, "parents", f, edge_universe(n), s, parents, entries);
  add_induced_poly(t, "inside", f, g, inner_shape(p, n), sets);
  return t;
}

class ComponentsVerifier : public Verifier {
 public:
  ComponentsVerifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        table_(f, inner_shape(p, h.n), false, rng, m),
        inside_(table_, false, m),
        edges_(f, edge_universe(h.n), resolve_params(p, h.n).s, rng, m),
        parents_(f, edge_universe(h.n), resolve_params(p, h.n).s, rng, m),
        part_(f, rng, m),
        m_(m, 0),
        count_(m, 0),
        nonroot_(m, 0),
        block_(m, 0) {}

  void consume(const StreamToken& tok) override {
    table_.update(tok.u, tok.v, f_->one());
    edges_.add_t(edge_index(tok.u, tok.v, n_, false), f_->one());
    ++*m_;
  }

  Accepted finish(TranscriptReader& proof) override {
    const Block& b = proof.expect(BlockKind::scalar_list, "forest");
    for (std::size_t i = 0; i < b.items.size();) {
      if (b.items[i] == kDelimiter) {
        if (*block_ == 0) throw Rejection("empty component");
        inside_.end_set();
        ++*count_;
        *block_ = 0;
        ++i;
        continue;
      }
      if (i + 3 > b.items.size()) throw Rejection("truncated forest entry");
      const Vertex v = read_vertex(b.items[i], n_, "forest");
      const std::uint64_t par = b.items[i + 1], depth = b.items[i + 2];
      i += 3;
      if (*block_ == 0) {
        if (par != 0 || depth != 0) throw Rejection("component must open with its root");
      } else {
        if (depth < 1 || depth >= n_) throw Rejection("forest depth out of range");
        const Vertex u = read_vertex(par, n_, "forest parent");
        edges_.add_s(edge_index(v, u, n_, false), f_->one());
        parents_.add_s(depth_index(u, static_cast<std::uint32_t>(depth - 1), n_), f_->one());
        ++*nonroot_;
      }
      parents_.add_t(depth_index(v, static_cast<std::uint32_t>(depth), n_), f_->one());
      part_.add(v);
      inside_.add_vertex(v);
      ++*block_;
    }
    if (*block_ != 0) throw Rejection("unterminated component");
    if (!part_.is_vertex_set(n_)) throw Rejection("components do not partition V");
    const Fe nonroot = f_->from_u64(*nonroot_);
    if (edges_.finish(proof.expect(BlockKind::coefficients, "tree-edges")) != nonroot)
      throw Rejection("a tree edge is not in the graph");
    if (parents_.finish(proof.expect(BlockKind::coefficients, "parents")) != nonroot)
      throw Rejection("a parent is missing one level up");
    if (inside_.finish(proof.expect(BlockKind::coefficients, "inside")) != f_->from_u64(2 * *m_))
      throw Rejection("an edge joins two claimed components");
    return {static_cast<std::int64_t>(*count_), {}};
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  EdgeTable table_;
  EdgeCounter inside_;
  SetSchemeVerifier edges_, parents_;
  VertexCover part_;
  Cell<std::uint64_t> m_, count_, nonroot_, block_;
};

// Cuts the subtree under a depth-1 vertex out into its own component.
bool split_tree(TreeCertificate& c) {
  for (auto& tree : c) {
    for (const auto& head : tree) {
      if (head.depth != 1) continue;
      std::vector<bool> below(tree.size(), false);
      std::vector<Vertex> members{head.v};
      // BFS order lists parents before children.
      for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree[i].v == head.v) below[i] = true;
        else
          for (auto m : members)
            if (tree[i].parent == m) {
              below[i] = true;
              members.push_back(tree[i].v);
              break;
            }
      }
      std::vector<TreeEntry> keep, cut;
      for (std::size_t i = 0; i < tree.size(); ++i) {
        if (!below[i]) {
          keep.push_back(tree[i]);
          continue;
        }
        TreeEntry e = tree[i];
        e.depth -= 1;
        if (e.v == head.v) e.parent = 0;
        cut.push_back(e);
      }
      tree = std::move(keep);
      c.push_back(std::move(cut));
      return true;
    }
  }
  return false;
}

class Components : public Scheme {
 public:
  std::string name() const override { return "components"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    resolve_params(p, g.n());
    require_simple(g, false, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    return components_proof(g, p, f, spanning_trees(DenseGraph::from_instance(g)));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<ComponentsVerifier>(h, p, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::components(DenseGraph::from_instance(g)), {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const std::uint32_t n = g.n();
    const std::uint32_t s = resolve_params(p, n).s;
    const ShapeConfig in = inner_shape(p, n);
    return {4ULL * n + 2 * set_hcost(edge_universe(n), s) + count_hcost(in),
            table_words(in) + (2ULL * in.s + 1) + 2 * (2ULL * s + 1) + 2 + 4};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("split-component",
                        [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f, Rng& rng) {
                          auto dg = DenseGraph::from_instance(g);
                          auto c = spanning_trees(dg);
                          if (!split_tree(c)) return components_proof(g, p, f, c);
                          auto t = components_proof(g, p, f, c);
                          std::vector<std::vector<Vertex>> sets;
                          for (const auto& tree : c) {
                            sets.emplace_back();
                            for (const auto& e : tree) sets.back().push_back(e.v);
                          }
                          shift_count_block(t, "inside", f,
                                            2 * (dg.edge_count() - oracle::induced_edges(dg, sets)), rng);
                          return t;
                        })};
  }
};

}  // namespace

std::unique_ptr<Scheme> make_maxmatch_frugal() { return std::make_unique<MaxMatchFrugal>(); }
std::unique_ptr<Scheme> make_maxmatch_laconic() { return std::make_unique<MaxMatchLaconic>(); }
std::unique_ptr<Scheme> make_mis() { return std::make_unique<Mis>(); }
std::unique_ptr<Scheme> make_toposort() { return std::make_unique<Toposort>(); }
std::unique_ptr<Scheme> make_acyclicity() { return std::make_unique<Acyclicity>(); }
std::unique_ptr<Scheme> make_components() { return std::make_unique<Components>(); }

}  // namespace adsv
