#include "adsv/generate.hpp"

#include <algorithm>
#include <numeric>

#include "adsv/protocol.hpp"

namespace adsv::gen {

namespace {

InstanceHeader header(std::uint32_t n, StreamModel m) {
  InstanceHeader h;
  h.n = n;
  h.model = m;
  return h;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

GraphInstance gnp(std::uint32_t n, double p, Rng& rng, StreamModel model) {
  GraphInstance g;
  g.header = header(n, model);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.coin(p)) edges.emplace_back(u, v);
  shuffle(edges, rng);
  for (auto [u, v] : edges) {
    if (rng.coin(0.5)) std::swap(u, v);
    g.add_edge(u, v, 1);
  }
  return g;
}

GraphInstance turnstile_gnp(std::uint32_t n, double p, std::int64_t max_mult, Rng& rng) {
  GraphInstance g;
  g.header = header(n, StreamModel::turnstile);
  struct Tok {
    Vertex u, v;
    std::int64_t d;
    int group;  // decoy insert/delete pairs share a group; -1 otherwise
    bool second;
  };
  std::vector<Tok> toks;
  int groups = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng.coin(p)) {
        std::int64_t m = rng.uniform(1, max_mult);
        // split the multiplicity over up to two updates
        if (m > 1 && rng.coin(0.5)) {
          std::int64_t a = rng.uniform(1, m - 1);
          toks.push_back({u, v, a, -1, false});
          toks.push_back({v, u, m - a, -1, false});
        } else {
          toks.push_back({u, v, m, -1, false});
        }
      } else if (rng.coin(p / 2)) {
        std::int64_t d = rng.uniform(1, 2);
        toks.push_back({u, v, d, groups, false});
        toks.push_back({v, u, -d, groups, true});
        ++groups;
      }
    }
  shuffle(toks, rng);
  // restore insert-before-delete for decoys
  std::vector<int> first_pos(groups, -1);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].group < 0) continue;
    if (first_pos[toks[i].group] < 0) {
      first_pos[toks[i].group] = static_cast<int>(i);
      if (toks[i].second) {
        // the deletion came first: swap signs so the earlier token inserts
        for (auto& t : toks)
          if (t.group == toks[i].group) t.d = -t.d;
      }
    }
  }
  for (const auto& t : toks) g.add_edge(t.u, t.v, t.d);
  return g;
}

GraphInstance random_dag(std::uint32_t n, double p, Rng& rng) {
  GraphInstance g;
  g.header = header(n, StreamModel::vanilla);
  g.header.directed = true;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  shuffle(order, rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.coin(p)) edges.emplace_back(order[i], order[j]);
  shuffle(edges, rng);
  for (auto [u, v] : edges) g.add_edge(u, v, 1);
  return g;
}

GraphInstance random_digraph(std::uint32_t n, double p, Rng& rng) {
  GraphInstance g;
  g.header = header(n, StreamModel::vanilla);
  g.header.directed = true;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (u != v && rng.coin(p)) arcs.emplace_back(u, v);
  shuffle(arcs, rng);
  for (auto [u, v] : arcs) g.add_edge(u, v, 1);
  return g;
}

GraphInstance weighted_gnp(std::uint32_t n, double p, std::int64_t W, Rng& rng, StreamModel model) {
  GraphInstance g;
  g.header = header(n, model);
  g.header.W = W;
  g.header.source = 1;
  std::vector<std::tuple<Vertex, Vertex, std::int64_t>> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.coin(p)) edges.emplace_back(u, v, rng.uniform(1, W));
  shuffle(edges, rng);
  for (auto [u, v, w] : edges) {
    if (model == StreamModel::turnstile && w > 1 && rng.coin(0.5)) {
      std::int64_t a = rng.uniform(1, w - 1);
      g.add_edge(u, v, a);
      g.add_edge(v, u, w - a);
    } else {
      g.add_edge(u, v, w);
    }
  }
  return g;
}

GraphInstance adjlist_gnp(std::uint32_t n, double p, Rng& rng) {
  GraphInstance base = gnp(n, p, rng);
  auto a = final_matrix(base);
  GraphInstance g;
  g.header = header(n, StreamModel::adjlist);
  std::vector<Vertex> owners(n);
  std::iota(owners.begin(), owners.end(), 1);
  shuffle(owners, rng);
  for (Vertex v : owners) {
    std::vector<Vertex> nbrs;
    for (Vertex u = 1; u <= n; ++u)
      if (a[v][u]) nbrs.push_back(u);
    shuffle(nbrs, rng);
    g.add_adjlist(v, nbrs);
  }
  return g;
}

std::vector<Vertex> random_subset(std::uint32_t n, double p, Rng& rng) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (rng.coin(p)) out.push_back(v);
  shuffle(out, rng);
  return out;
}

std::vector<std::string> kinds() { return {"gnp", "path", "cycle", "clique", "dag", "weighted-gnp", "adjlist"}; }

GraphInstance make(const std::string& kind, const Options& opt) {
  Rng rng(opt.seed);
  const auto n = opt.n;
  if (n == 0) throw ConfigError("n must be positive");
  if (kind == "gnp") return gnp(n, opt.p, rng);
  if (kind == "dag") return random_dag(n, opt.p, rng);
  if (kind == "weighted-gnp") return weighted_gnp(n, opt.p, opt.W, rng, StreamModel::weighted);
  if (kind == "adjlist") return adjlist_gnp(n, opt.p, rng);
  GraphInstance g;
  g.header = header(n, StreamModel::vanilla);
  if (kind == "path" || kind == "cycle") {
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    if (kind == "cycle" && n >= 3) g.add_edge(n, 1);
    return g;
  }
  if (kind == "clique") {
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
  }
  throw ConfigError("unknown generator kind '" + kind + "'");
}

void add_random_sets(GraphInstance& g, std::size_t count, bool pairs, Rng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    auto u = random_subset(g.n(), pairs ? 0.5 : 0.4, rng);
    if (!pairs) {
      g.sets.push_back(std::move(u));
      continue;
    }
    std::vector<Vertex> a, b;
    for (Vertex v : u) (rng.coin(0.5) ? a : b).push_back(v);
    g.set_pairs.emplace_back(std::move(a), std::move(b));
  }
}

GraphInstance for_scheme(const std::string& scheme, std::uint32_t n, Rng& rng) {
  static const double densities[] = {0.15, 0.3, 0.5};
  const double p = densities[rng.below(3)];
  GraphInstance g;
  if (scheme == "tri-laconic" || scheme == "tri-frugal") {
    g = turnstile_gnp(n, p, 3, rng);
  } else if (scheme == "tri-adj") {
    g = adjlist_gnp(n, p, rng);
  } else if (scheme == "edgecount-induced" || scheme == "edgecount-cross") {
    g = turnstile_gnp(n, p, 2, rng);
    add_random_sets(g, rng.uniform(1, 6), scheme == "edgecount-cross", rng);
  } else if (scheme == "toposort") {
    g = random_dag(n, p, rng);
  } else if (scheme == "acyclicity") {
    g = rng.coin(0.5) ? random_dag(n, p, rng) : random_digraph(n, 0.5 / n + 0.05, rng);
  } else if (scheme == "components") {
    g = gnp(n, 1.5 / n, rng);
  } else if (scheme == "sssp-wturnstile" || scheme == "sssp-wvanilla") {
    g = weighted_gnp(n, p, 4, rng, scheme == "sssp-wturnstile" ? StreamModel::turnstile : StreamModel::weighted);
  } else if (scheme.rfind("sssp", 0) == 0 || scheme == "stpath") {
    g = gnp(n, p / 2, rng, rng.coin(0.5) ? StreamModel::vanilla : StreamModel::turnstile);
  } else {
    find_scheme(scheme);
    g = gnp(n, p, rng);
  }
  if (scheme.rfind("sssp", 0) == 0 || scheme == "stpath") {
    g.header.source = static_cast<Vertex>(rng.uniform(1, n));
    g.header.target = static_cast<Vertex>(rng.uniform(1, n));
  }
  return g;
}

}  // namespace adsv::gen
