#include "adsv/edgecount.hpp"

#include <set>

#include "adsv/oracle.hpp"

namespace adsv {

EdgeTable::EdgeTable(const FieldConfig& f, const ShapeConfig& shape, bool directed, Rng& rng, SpaceMeter& m)
    : f_(&f),
      shape_(shape),
      directed_(directed),
      dom_(&LagrangeDomain::get(f, shape.t)),
      r1_(m, rng.fe_random(f)),
      r2_(m, rng.fe_random(f)),
      a_(m, static_cast<std::size_t>(shape.s) * shape.s, f.zero()) {}

void EdgeTable::add(Vertex u, Vertex v, const Fe& delta) {
  auto [xu, yu] = shape_vertex(u, shape_);
  auto [xv, yv] = shape_vertex(v, shape_);
  a_[(yu - 1) * shape_.s + (yv - 1)] += delta * dom_->unit_impulse(xu, *r1_) * dom_->unit_impulse(xv, *r2_);
}

void EdgeTable::update(Vertex u, Vertex v, const Fe& delta) {
  add(u, v, delta);
  if (!directed_) add(v, u, delta);
}

SetSketch::SetSketch(const EdgeTable& table, SpaceMeter& m)
    : table_(&table), b1_(m, table.shape().s, table.field().zero()), b2_(m, table.shape().s, table.field().zero()) {}

void SetSketch::extend(Vertex v) {
  auto [x, y] = shape_vertex(v, table_->shape());
  b1_[y - 1] += table_->domain().unit_impulse(x, table_->r1());
  b2_[y - 1] += table_->domain().unit_impulse(x, table_->r2());
}

void SetSketch::clear() {
  b1_.fill(table_->field().zero());
  b2_.fill(table_->field().zero());
}

Fe contract(const EdgeTable& a, const SetSketch& u, const SetSketch& w) {
  const auto s = a.shape().s;
  Fe total = a.field().zero();
  for (std::uint32_t y1 = 1; y1 <= s; ++y1) {
    if (u.at_r1(y1).is_zero()) continue;
    Fe row = a.field().zero();
    for (std::uint32_t y2 = 1; y2 <= s; ++y2) row += w.at_r2(y2) * a.at(y1, y2);
    total += u.at_r1(y1) * row;
  }
  return total;
}

DegreeBounds edgecount_bounds(const ShapeConfig& shape) { return {2 * (shape.t - 1), 2 * (shape.t - 1)}; }

EdgeCounter::EdgeCounter(const EdgeTable& table, bool cross, SpaceMeter& m)
    : table_(&table), cross_(cross), u_(table, m), acc_(m, table.field().zero()) {
  if (cross) w_.emplace(table, m);
}

void EdgeCounter::add_vertex(Vertex v, int side) {
  if (side != 0 && !cross_) throw Rejection("second side given to an induced edge count");
  if (v < 1 || v > table_->shape().n) throw Rejection("set vertex outside [1,n]");
  (side == 0 ? u_ : *w_).extend(v);
}

void EdgeCounter::end_set(bool keep_u) {
  *acc_ += contract(*table_, u_, cross_ ? *w_ : u_);
  if (!keep_u) u_.clear();
  if (cross_) w_->clear();
}

Fe EdgeCounter::finish(const Block& poly) const {
  const auto& dom = table_->domain();
  PolyCheck pc = read_poly(poly, bounds(), {table_->r1(), table_->r2()}, {&dom, &dom}, table_->field());
  if (pc.value != *acc_) throw Rejection("edge-count sum-check failed ('" + poly.label + "')");
  return pc.grid_sum;
}

FeMatrix adjacency_matrix(const FieldConfig& f, const GraphInstance& g) {
  auto a = final_matrix(g);
  FeMatrix out(a.size(), std::vector<Fe>(a.size(), f.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != 0) out[i][j] = f(a[i][j]);
  return out;
}

FeMatrix comembership(const FieldConfig& f, std::uint32_t n, const std::vector<std::vector<Vertex>>& sets) {
  FeMatrix out(n + 1, std::vector<Fe>(n + 1, f.zero()));
  for (const auto& s : sets)
    for (auto a : s)
      for (auto b : s) out[a][b] += f.one();
  return out;
}

FeMatrix comembership(const FieldConfig& f, std::uint32_t n,
                      const std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& pairs) {
  FeMatrix out(n + 1, std::vector<Fe>(n + 1, f.zero()));
  for (const auto& [u, w] : pairs)
    for (auto a : u)
      for (auto b : w) out[a][b] += f.one();
  return out;
}

namespace {

// Extension along both x-axes of the t x t block {M(vertex(x1,y1), vertex(x2,y2))}, on [2t-1]^2.
// lag[w][x] = delta_x(w).
std::vector<Fe> extend_block(const FieldConfig& f, const ShapeConfig& shape, const FeMatrix& m, std::uint32_t y1,
                             std::uint32_t y2, const std::vector<std::vector<Fe>>& lag, bool& nonzero) {
  const std::uint32_t t = shape.t, np = 2 * t - 1;
  std::vector<Fe> blk(static_cast<std::size_t>(t) * t, f.zero());
  nonzero = false;
  for (std::uint32_t x1 = 1; x1 <= t; ++x1) {
    const std::uint64_t v1 = static_cast<std::uint64_t>(x1 - 1) * shape.s + y1;
    if (v1 > shape.n) break;
    for (std::uint32_t x2 = 1; x2 <= t; ++x2) {
      const std::uint64_t v2 = static_cast<std::uint64_t>(x2 - 1) * shape.s + y2;
      if (v2 > shape.n) break;
      const Fe& val = m[v1][v2];
      if (!val.is_zero()) {
        blk[(x1 - 1) * t + (x2 - 1)] = val;
        nonzero = true;
      }
    }
  }
  if (!nonzero) return {};
  // half[x1][w2] = sum_x2 blk[x1][x2] lag[w2][x2]
  std::vector<Fe> half(static_cast<std::size_t>(t) * np, f.zero());
  for (std::uint32_t x1 = 0; x1 < t; ++x1)
    for (std::uint32_t x2 = 0; x2 < t; ++x2) {
      const Fe& b = blk[x1 * t + x2];
      if (b.is_zero()) continue;
      for (std::uint32_t w2 = 0; w2 < np; ++w2) half[x1 * np + w2] += b * lag[w2][x2];
    }
  std::vector<Fe> out(static_cast<std::size_t>(np) * np, f.zero());
  for (std::uint32_t w1 = 0; w1 < np; ++w1)
    for (std::uint32_t x1 = 0; x1 < t; ++x1) {
      const Fe& l = lag[w1][x1];
      if (l.is_zero()) continue;
      for (std::uint32_t w2 = 0; w2 < np; ++w2) out[w1 * np + w2] += l * half[x1 * np + w2];
    }
  return out;
}

}  // namespace

std::vector<Fe> pair_product_evals(const FieldConfig& f, const ShapeConfig& shape, const FeMatrix& nmat,
                                   const FeMatrix& amat) {
  const std::uint32_t t = shape.t, np = 2 * t - 1;
  const auto& dom = LagrangeDomain::get(f, t);
  std::vector<std::vector<Fe>> lag;
  for (std::uint32_t w = 1; w <= np; ++w) lag.push_back(dom.impulse_row(f.from_u64(w)));
  std::vector<Fe> evals(static_cast<std::size_t>(np) * np, f.zero());
  for (std::uint32_t y1 = 1; y1 <= shape.s; ++y1)
    for (std::uint32_t y2 = 1; y2 <= shape.s; ++y2) {
      bool nz_a = false, nz_n = false;
      auto ea = extend_block(f, shape, amat, y1, y2, lag, nz_a);
      if (!nz_a) continue;
      auto en = extend_block(f, shape, nmat, y1, y2, lag, nz_n);
      if (!nz_n) continue;
      for (std::size_t i = 0; i < evals.size(); ++i) evals[i] += ea[i] * en[i];
    }
  return evals;
}

std::vector<Fe> edgecount_poly(const FieldConfig& f, const ShapeConfig& shape, const FeMatrix& nmat,
                               const FeMatrix& amat) {
  return graded_from_evaluations(f, edgecount_bounds(shape), pair_product_evals(f, shape, nmat, amat));
}

std::vector<const LagrangeDomain*> doubled_degree_domains(const FieldConfig& f, const Block& b) {
  std::vector<const LagrangeDomain*> out;
  for (auto d : b.bounds) out.push_back(&LagrangeDomain::get(f, d / 2 + 1));
  return out;
}

namespace {

void check_vertex_set(const std::vector<Vertex>& s, const char* what) {
  std::set<Vertex> seen(s.begin(), s.end());
  if (seen.size() != s.size()) throw ConfigError(std::string(what) + " lists a vertex twice");
}

class EdgeCountVerifier : public Verifier {
 public:
  EdgeCountVerifier(const ShapeConfig& shape, const FieldConfig& f, bool cross, Rng& rng, SpaceMeter& m)
      : f_(&f), cross_(cross), table_(f, shape, false, rng, m), counter_(table_, cross, m) {}

  void consume(const StreamToken& tok) override {
    switch (tok.kind) {
      case TokenKind::turnstile_edge:
      case TokenKind::vanilla_edge: table_.update(tok.u, tok.v, (*f_)(tok.value)); break;
      case TokenKind::set_vertex: counter_.add_vertex(tok.u, static_cast<int>(tok.value)); break;
      case TokenKind::set_end: counter_.end_set(); break;
      default: throw Rejection("token kind not accepted by edge counting");
    }
  }

  Accepted finish(TranscriptReader& proof) override {
    Fe sum = counter_.finish(proof.expect(BlockKind::coefficients, "p"));
    std::int64_t v = lift(sum);
    if (cross_) return {v, {}};
    if (v % 2 != 0) throw Rejection("induced edge count sum is odd");
    return {v / 2, {}};
  }

 private:
  const FieldConfig* f_;
  bool cross_;
  EdgeTable table_;
  EdgeCounter counter_;
};

class EdgeCountScheme : public Scheme {
 public:
  explicit EdgeCountScheme(bool cross) : cross_(cross) {}

  std::string name() const override { return cross_ ? "edgecount-cross" : "edgecount-induced"; }

  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    if (g.header.model != StreamModel::turnstile && g.header.model != StreamModel::vanilla)
      throw ConfigError(name() + " needs a turnstile or vanilla edge stream");
    if (g.header.directed) throw ConfigError(name() + " needs an undirected graph");
    if (cross_) {
      if (!g.sets.empty()) throw ConfigError("edgecount-cross takes pair: lines, not set: lines");
      for (const auto& [u, w] : g.set_pairs) {
        check_vertex_set(u, "pair side");
        check_vertex_set(w, "pair side");
        std::set<Vertex> su(u.begin(), u.end());
        for (auto v : w)
          if (su.count(v)) throw ConfigError("pair sides must be disjoint");
      }
    } else {
      if (!g.set_pairs.empty()) throw ConfigError("edgecount-induced takes set: lines, not pair: lines");
      for (const auto& s : g.sets) check_vertex_set(s, "set");
    }
  }

  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    FeMatrix nmat = cross_ ? comembership(f, g.n(), g.set_pairs) : comembership(f, g.n(), g.sets);
    ProofTranscript t(f.modulus());
    t.add_coefficients("p", edgecount_bounds(shape), edgecount_poly(f, shape, nmat, adjacency_matrix(f, g)));
    return t;
  }

  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& meter) const override {
    return std::make_unique<EdgeCountVerifier>(shape_of(p, h.n), f, cross_, rng, meter);
  }

  Accepted oracle_output(const GraphInstance& g) const override {
    auto dg = oracle::DenseGraph::from_instance(g);
    return {cross_ ? oracle::cross_edges(dg, g.set_pairs) : oracle::induced_edges(dg, g.sets), {}};
  }

  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const ShapeConfig shape = shape_of(p, g.n());
    const std::uint64_t s = shape.s, t = shape.t;
    return {(2 * t - 1) * (2 * t - 1), s * s + 4 * s + 3};
  }

  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::shift_sum("p", cross_ ? 1 : 2, doubled_degree_domains)};
  }

  bool reads_set_stream() const override { return true; }

 private:
  bool cross_;
};

}  // namespace

std::unique_ptr<Scheme> make_edgecount_induced() { return std::make_unique<EdgeCountScheme>(false); }
std::unique_ptr<Scheme> make_edgecount_cross() { return std::make_unique<EdgeCountScheme>(true); }

}  // namespace adsv
