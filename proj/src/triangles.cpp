#include "adsv/triangles.hpp"

#include <map>

#include "adsv/oracle.hpp"
#include "adsv/setops.hpp"

namespace adsv {

namespace {

void require_undirected_edges(const GraphInstance& g, const std::string& name) {
  if (g.header.model != StreamModel::turnstile && g.header.model != StreamModel::vanilla)
    throw ConfigError(name + " needs a turnstile or vanilla edge stream");
  if (g.header.directed) throw ConfigError(name + " needs an undirected graph");
}

void require_simple_vanilla(const GraphInstance& g, const std::string& name) {
  if (g.header.model != StreamModel::vanilla || g.header.directed)
    throw ConfigError(name + " needs an undirected vanilla stream");
  auto a = final_matrix(g);
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = 1; v <= g.n(); ++v)
      if (a[u][v] > 1) throw ConfigError(name + " needs a simple graph (edge " + std::to_string(u) + "-" +
                                         std::to_string(v) + " repeats)");
}

// Rows lag[w-1][x-1] = delta_x(w) for w in [2t-1], as raw residues.
std::vector<std::vector<std::uint64_t>> raw_impulse_rows(const FieldConfig& f, std::uint64_t size,
                                                         std::uint64_t points) {
  const auto& dom = LagrangeDomain::get(f, size);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t w = 1; w <= points; ++w) {
    std::vector<std::uint64_t> row;
    for (const auto& x : dom.impulse_row(f.from_u64(w))) row.push_back(x.value());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Fe> to_fe(const FieldConfig& f, const std::vector<std::uint64_t>& raw) {
  std::vector<Fe> out;
  out.reserve(raw.size());
  for (auto x : raw) out.push_back(f.from_u64(x));
  return out;
}

std::vector<const LagrangeDomain*> half_degree_domain(const FieldConfig& f, const Block& b) {
  return doubled_degree_domains(f, b);
}

}  // namespace

// ---------------------------------------------------------------- laconic

std::vector<Fe> tri_laconic_poly(const GraphInstance& g, const ShapeConfig& shape, const FieldConfig& f) {
  const std::uint32_t t = shape.t, s = shape.s, n = g.n(), np = 2 * t - 1;
  auto lag = raw_impulse_rows(f, t, np);
  // tab[x][v][y] = a~_{j-1}(v, x, y) for x in [2t-1]
  std::vector<std::uint64_t> tab(static_cast<std::size_t>(np) * (n + 1) * s, 0);
  std::vector<std::uint64_t> evals(np, 0);
  for (const auto& tok : g.tokens) {
    const std::uint64_t d = f(tok.value).value();
    auto [xu, yu] = shape_vertex(tok.u, shape);
    auto [xv, yv] = shape_vertex(tok.v, shape);
    for (std::uint32_t x = 0; x < np; ++x) {
      std::uint64_t* tu = &tab[(static_cast<std::size_t>(x) * (n + 1) + tok.u) * s];
      std::uint64_t* tv = &tab[(static_cast<std::size_t>(x) * (n + 1) + tok.v) * s];
      std::uint64_t acc = 0;
      for (std::uint32_t y = 0; y < s; ++y) acc = f.add(acc, f.mul(tu[y], tv[y]));
      evals[x] = f.add(evals[x], f.mul(d, acc));
      tu[yv - 1] = f.add(tu[yv - 1], f.mul(d, lag[x][xv - 1]));
      tv[yu - 1] = f.add(tv[yu - 1], f.mul(d, lag[x][xu - 1]));
    }
  }
  return graded_from_evaluations(f, {2 * (t - 1)}, to_fe(f, evals));
}

namespace {

class LaconicVerifier : public Verifier {
 public:
  LaconicVerifier(const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        shape_(shape),
        dom_(&LagrangeDomain::get(f, shape.t)),
        r3_(m, rng.fe_random(f)),
        tab_(m, static_cast<std::size_t>(shape.n) * shape.s, f.zero()),
        acc_(m, f.zero()) {}

  void consume(const StreamToken& tok) override {
    const Fe d = (*f_)(tok.value);
    auto [xu, yu] = shape_vertex(tok.u, shape_);
    auto [xv, yv] = shape_vertex(tok.v, shape_);
    const std::size_t ru = static_cast<std::size_t>(tok.u - 1) * shape_.s, rv = static_cast<std::size_t>(tok.v - 1) * shape_.s;
    Fe dot = f_->zero();
    for (std::uint32_t y = 0; y < shape_.s; ++y) dot += tab_[ru + y] * tab_[rv + y];
    *acc_ += d * dot;
    tab_[ru + yv - 1] += d * dom_->unit_impulse(xv, *r3_);
    tab_[rv + yu - 1] += d * dom_->unit_impulse(xu, *r3_);
  }

  Accepted finish(TranscriptReader& proof) override {
    const Block& b = proof.expect(BlockKind::coefficients, "p");
    PolyCheck pc = read_poly(b, {2 * (shape_.t - 1)}, {*r3_}, {dom_}, *f_);
    if (pc.value != *acc_) throw Rejection("p-hat(r3) differs from the accumulator");
    return {lift_signed(pc.grid_sum), {}};
  }

 private:
  const FieldConfig* f_;
  ShapeConfig shape_;
  const LagrangeDomain* dom_;
  Cell<Fe> r3_;
  MeteredVec<Fe> tab_;
  Cell<Fe> acc_;
};

class TriLaconic : public Scheme {
 public:
  std::string name() const override { return "tri-laconic"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    require_undirected_edges(g, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    ProofTranscript t(f.modulus());
    t.add_coefficients("p", {2 * (shape.t - 1)}, tri_laconic_poly(g, shape, f));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<LaconicVerifier>(shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override { return {oracle::triangles_by_updates(g), {}}; }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    auto sh = shape_of(p, g.n());
    return {2ULL * sh.t - 1, static_cast<std::uint64_t>(g.n()) * sh.s + 2};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), mutate::shift_sum("p", 1, half_degree_domain)};
  }
};

}  // namespace

// ---------------------------------------------------------------- frugal

std::vector<Fe> tri_frugal_poly(const GraphInstance& g, const ShapeConfig& shape, const FieldConfig& f) {
  const std::uint32_t t = shape.t, s = shape.s, n = g.n(), np = 2 * t - 1, nn = 2 * n - 1;
  auto lag_t = raw_impulse_rows(f, t, np);
  auto lag_n = raw_impulse_rows(f, n, nn);
  // b[(w*s + y)*nn + v3] = b~_{j-1}(w, y+1, v3+1)
  std::vector<std::uint64_t> b(static_cast<std::size_t>(np) * s * nn, 0);
  // q[(v3*np + w1)*np + w2] during accumulation
  std::vector<std::uint64_t> q(static_cast<std::size_t>(nn) * np * np, 0);
  std::vector<std::uint64_t> fv(np), gv(np);
  for (const auto& tok : g.tokens) {
    const std::uint64_t d = f(tok.value).value();
    auto [xu, yu] = shape_vertex(tok.u, shape);
    auto [xv, yv] = shape_vertex(tok.v, shape);
    for (std::uint32_t v3 = 0; v3 < nn; ++v3) {
      bool any = false;
      for (std::uint32_t w = 0; w < np; ++w) {
        fv[w] = f.mul(f.mul(b[(static_cast<std::size_t>(w) * s + yu - 1) * nn + v3], lag_t[w][xu - 1]), d);
        gv[w] = f.mul(b[(static_cast<std::size_t>(w) * s + yv - 1) * nn + v3], lag_t[w][xv - 1]);
        any |= fv[w] != 0;
      }
      if (!any) continue;
      std::uint64_t* qrow = &q[static_cast<std::size_t>(v3) * np * np];
      for (std::uint32_t w1 = 0; w1 < np; ++w1) {
        if (fv[w1] == 0) continue;
        std::uint64_t* qr = qrow + static_cast<std::size_t>(w1) * np;
        for (std::uint32_t w2 = 0; w2 < np; ++w2) qr[w2] = f.add(qr[w2], f.mul(fv[w1], gv[w2]));
      }
    }
    // A(u,v) and A(v,u) both change.
    for (auto [x, y, other] : {std::tuple{xu, yu, tok.v}, std::tuple{xv, yv, tok.u}}) {
      for (std::uint32_t w = 0; w < np; ++w) {
        const std::uint64_t c = f.mul(d, lag_t[w][x - 1]);
        if (c == 0) continue;
        std::uint64_t* row = &b[(static_cast<std::size_t>(w) * s + y - 1) * nn];
        for (std::uint32_t v3 = 0; v3 < nn; ++v3) row[v3] = f.add(row[v3], f.mul(c, lag_n[v3][other - 1]));
      }
    }
  }
  std::vector<Fe> evals;
  evals.reserve(q.size());
  for (std::uint32_t w1 = 0; w1 < np; ++w1)
    for (std::uint32_t w2 = 0; w2 < np; ++w2)
      for (std::uint32_t v3 = 0; v3 < nn; ++v3)
        evals.push_back(f.from_u64(q[(static_cast<std::size_t>(v3) * np + w1) * np + w2]));
  return graded_from_evaluations(f, {2 * (t - 1), 2 * (t - 1), 2 * (n - 1)}, std::move(evals));
}

namespace {

class FrugalVerifier : public Verifier {
 public:
  FrugalVerifier(const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        shape_(shape),
        dom_t_(&LagrangeDomain::get(f, shape.t)),
        dom_n_(&LagrangeDomain::get(f, shape.n)),
        r1_(m, rng.fe_random(f)),
        r2_(m, rng.fe_random(f)),
        r3_(m, rng.fe_random(f)),
        b1_(m, shape.s, f.zero()),
        b2_(m, shape.s, f.zero()),
        acc_(m, f.zero()) {}

  void consume(const StreamToken& tok) override {
    const Fe d = (*f_)(tok.value);
    auto [xu, yu] = shape_vertex(tok.u, shape_);
    auto [xv, yv] = shape_vertex(tok.v, shape_);
    const Fe du1 = dom_t_->unit_impulse(xu, *r1_), du2 = dom_t_->unit_impulse(xu, *r2_);
    const Fe dv1 = dom_t_->unit_impulse(xv, *r1_), dv2 = dom_t_->unit_impulse(xv, *r2_);
    *acc_ += d * b1_[yu - 1] * b2_[yv - 1] * du1 * dv2;
    const Fe eu = d * dom_n_->unit_impulse(tok.v, *r3_), ev = d * dom_n_->unit_impulse(tok.u, *r3_);
    b1_[yu - 1] += eu * du1;
    b2_[yu - 1] += eu * du2;
    b1_[yv - 1] += ev * dv1;
    b2_[yv - 1] += ev * dv2;
  }

  Accepted finish(TranscriptReader& proof) override {
    const Block& b = proof.expect(BlockKind::coefficients, "q");
    const std::uint32_t dt = 2 * (shape_.t - 1);
    PolyCheck pc = read_poly(b, {dt, dt, 2 * (shape_.n - 1)}, {*r1_, *r2_, *r3_}, {dom_t_, dom_t_, dom_n_}, *f_);
    if (pc.value != *acc_) throw Rejection("q-hat(r1,r2,r3) differs from the accumulator");
    return {lift_signed(pc.grid_sum), {}};
  }

 private:
  const FieldConfig* f_;
  ShapeConfig shape_;
  const LagrangeDomain* dom_t_;
  const LagrangeDomain* dom_n_;
  Cell<Fe> r1_, r2_, r3_;
  MeteredVec<Fe> b1_, b2_;
  Cell<Fe> acc_;
};

std::vector<const LagrangeDomain*> frugal_domains(const FieldConfig& f, const Block& b) {
  return {&LagrangeDomain::get(f, b.bounds[0] / 2 + 1), &LagrangeDomain::get(f, b.bounds[1] / 2 + 1),
          &LagrangeDomain::get(f, b.bounds[2] / 2 + 1)};
}

class TriFrugal : public Scheme {
 public:
  std::string name() const override { return "tri-frugal"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    require_undirected_edges(g, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    ProofTranscript t(f.modulus());
    t.add_coefficients("q", {2 * (shape.t - 1), 2 * (shape.t - 1), 2 * (g.n() - 1)}, tri_frugal_poly(g, shape, f));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<FrugalVerifier>(shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override { return {oracle::triangles_by_updates(g), {}}; }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    auto sh = shape_of(p, g.n());
    const std::uint64_t a = 2ULL * sh.t - 1;
    return {a * a * (2ULL * g.n() - 1), 2ULL * sh.s + 4};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), mutate::shift_sum("q", 1, frugal_domains)};
  }
};

// ---------------------------------------------------------------- sparse

// Counts raw = sum over grid of p-hat = 2 * InducedEdgeCount = 6T, rejecting non-multiples.
std::int64_t triangles_from_raw(const Fe& grid_sum) {
  const std::int64_t raw = lift(grid_sum);
  if (raw % 2 != 0) throw Rejection("induced edge count sum is odd");
  if ((raw / 2) % 3 != 0) throw Rejection("neighborhood edge count is not a multiple of 3");
  return raw / 6;
}

class SparseVerifier : public Verifier {
 public:
  SparseVerifier(const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(shape.n),
        table_(f, shape, false, rng, m),
        counter_(table_, false, m),
        fp_lease_(m, 2),
        fp_(rng.fe_random(f)),
        owner_(m, 1) {}

  void consume(const StreamToken& tok) override {
    table_.update(tok.u, tok.v, f_->one());
    fp_.update(edge_index(tok.u, tok.v, n_, true), f_->one());
    fp_.update(edge_index(tok.v, tok.u, n_, true), f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    const Block& lists = proof.expect(BlockKind::vertex_list, "neighborhoods");
    for (auto item : lists.items) {
      if (*owner_ > n_) throw Rejection("more than n neighborhoods");
      if (item == kDelimiter) {
        counter_.end_set();
        ++*owner_;
        continue;
      }
      Vertex w = read_vertex(item, n_, "neighborhoods");
      fp_.update(edge_index(*owner_, w, n_, true), (*f_)(-1));
      counter_.add_vertex(w);
    }
    if (*owner_ != n_ + 1) throw Rejection("expected exactly n neighborhoods");
    if (!fp_.value().is_zero()) throw Rejection("neighborhood lists do not match the edge stream");
    return {triangles_from_raw(counter_.finish(proof.expect(BlockKind::coefficients, "p"))), {}};
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  EdgeTable table_;
  EdgeCounter counter_;
  Lease fp_lease_;
  Fingerprint fp_;
  Cell<std::uint32_t> owner_;
};

Mutation vertex_substitute(std::string label) {
  return {"vertex-substitute", [label](const Scheme&, const GraphInstance& g, const SchemeParams&, const FieldConfig&,
                                       const ProofTranscript& honest, Rng& rng) {
            ProofTranscript t = honest;
            for (auto& b : t.blocks()) {
              if (b.label != label) continue;
              std::vector<std::size_t> idx;
              for (std::size_t i = 0; i < b.items.size(); ++i)
                if (b.items[i] != kDelimiter) idx.push_back(i);
              if (idx.empty() || g.n() < 2) throw std::logic_error("vertex-substitute: nothing to replace");
              auto& item = b.items[idx[rng.below(idx.size())]];
              item = 1 + (item - 1 + 1 + rng.below(g.n() - 1)) % g.n();
              return t;
            }
            throw std::logic_error("vertex-substitute: no block '" + label + "'");
          }};
}

class TriSparse : public Scheme {
 public:
  std::string name() const override { return "tri-sparse"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    require_simple_vanilla(g, name());
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    auto a = final_matrix(g);
    std::vector<std::vector<Vertex>> nbhd(g.n());
    std::vector<std::uint64_t> items;
    for (Vertex v = 1; v <= g.n(); ++v) {
      for (Vertex w = 1; w <= g.n(); ++w)
        if (a[v][w]) {
          nbhd[v - 1].push_back(w);
          items.push_back(w);
        }
      items.push_back(kDelimiter);
    }
    ProofTranscript t(f.modulus());
    t.add_vertices("neighborhoods", std::move(items));
    t.add_coefficients("p", edgecount_bounds(shape),
                       edgecount_poly(f, shape, comembership(f, g.n(), nbhd), adjacency_matrix(f, g)));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<SparseVerifier>(shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::triangles(oracle::DenseGraph::from_instance(g)), {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    auto sh = shape_of(p, g.n());
    const std::uint64_t a = 2ULL * sh.t - 1, s = sh.s;
    return {a * a + 2 * g.tokens.size() + g.n(), s * s + 2 * s + 6};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), mutate::shift_sum("p", 6, doubled_degree_domains),
            vertex_substitute("neighborhoods")};
  }
};

// ---------------------------------------------------------------- adjacency list

// Each entry (o, w) enters the symmetric table at once and w joins U_o; U_o is counted when
// the owner changes. A triangle with owners in order a, b, c contributes 1 at b and 2 at c, so
// the induced count is 3T.
class AdjVerifier : public Verifier {
 public:
  AdjVerifier(const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f), table_(f, shape, false, rng, m), counter_(table_, false, m), owner_(m, 0) {}

  void consume(const StreamToken& tok) override {
    if (tok.kind != TokenKind::adjlist_entry) throw Rejection("tri-adj reads adjacency-list entries only");
    if (tok.u != *owner_) {
      if (*owner_ != 0) counter_.end_set();
      *owner_ = tok.u;
    }
    table_.update(tok.u, tok.v, f_->one());
    counter_.add_vertex(tok.v);
  }

  Accepted finish(TranscriptReader& proof) override {
    if (*owner_ != 0) counter_.end_set();
    return {triangles_from_raw(counter_.finish(proof.expect(BlockKind::coefficients, "p"))), {}};
  }

 private:
  const FieldConfig* f_;
  EdgeTable table_;
  EdgeCounter counter_;
  Cell<Vertex> owner_;
};

class TriAdj : public Scheme {
 public:
  std::string name() const override { return "tri-adj"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    if (g.header.model != StreamModel::adjlist) throw ConfigError("tri-adj needs an adjacency-list stream");
    auto a = final_matrix(g);
    for (Vertex u = 1; u <= g.n(); ++u)
      for (Vertex v = 1; v <= g.n(); ++v) {
        if (a[u][v] > 1) throw ConfigError("adjacency list repeats a neighbor");
        if (a[u][v] != a[v][u]) throw ConfigError("adjacency lists are not symmetric");
      }
  }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    const std::uint32_t np = 2 * shape.t - 1;
    FeMatrix a(g.n() + 1, std::vector<Fe>(g.n() + 1, f.zero()));
    std::vector<Fe> evals(static_cast<std::size_t>(np) * np, f.zero());
    std::vector<Vertex> cur;
    auto close = [&] {
      if (cur.empty()) return;
      auto part = pair_product_evals(f, shape, comembership(f, g.n(), std::vector<std::vector<Vertex>>{cur}), a);
      for (std::size_t i = 0; i < evals.size(); ++i) evals[i] += part[i];
      cur.clear();
    };
    Vertex owner = 0;
    for (const auto& tok : g.tokens) {
      if (tok.u != owner) {
        close();
        owner = tok.u;
      }
      a[tok.u][tok.v] += f.one();
      a[tok.v][tok.u] += f.one();
      cur.push_back(tok.v);
    }
    close();
    ProofTranscript t(f.modulus());
    t.add_coefficients("p", edgecount_bounds(shape), graded_from_evaluations(f, edgecount_bounds(shape), evals));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<AdjVerifier>(shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    return {oracle::triangles(oracle::DenseGraph::from_instance(g)), {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    auto sh = shape_of(p, g.n());
    const std::uint64_t a = 2ULL * sh.t - 1, s = sh.s;
    return {a * a, s * s + 2 * s + 4};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), mutate::shift_sum("p", 6, doubled_degree_domains)};
  }
};

}  // namespace

std::unique_ptr<Scheme> make_tri_laconic() { return std::make_unique<TriLaconic>(); }
std::unique_ptr<Scheme> make_tri_frugal() { return std::make_unique<TriFrugal>(); }
std::unique_ptr<Scheme> make_tri_sparse() { return std::make_unique<TriSparse>(); }
std::unique_ptr<Scheme> make_tri_adj() { return std::make_unique<TriAdj>(); }

}  // namespace adsv
