#include "adsv/sssp.hpp"

#include <algorithm>

#include "adsv/oracle.hpp"
#include "adsv/setops.hpp"

namespace adsv {

Vertex source_of(const InstanceHeader& h) { return h.source.value_or(1); }

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void require_source(const GraphInstance& g, const std::string& name) {
  const Vertex s = source_of(g.header);
  if (s < 1 || s > g.n()) throw ConfigError(name + ": source " + std::to_string(s) + " outside [1,n]");
}

std::int64_t max_finite(const std::vector<std::int64_t>& dist) {
  std::int64_t d = 0;
  for (std::size_t v = 1; v < dist.size(); ++v) d = std::max(d, dist[v]);
  return d;
}

Rejection round_reject(int d, const std::string& what) {
  return Rejection("round " + std::to_string(d) + ": " + what, d);
}

void require_bounds(const Block& b, const DegreeBounds& expected, int d) {
  if (b.bounds != expected) throw round_reject(d, "block '" + b.label + "' declares unexpected degree bounds");
  if (b.items.size() != block_size(expected)) throw round_reject(d, "block '" + b.label + "' has wrong length");
}

// Index of the weighted edge (u,v,w) in the universe [n^2 W].
std::uint64_t weighted_index(Vertex u, Vertex v, std::int64_t w, std::uint32_t n, bool directed, std::int64_t W) {
  return (edge_index(u, v, n, directed) - 1) * static_cast<std::uint64_t>(W) + static_cast<std::uint64_t>(w);
}

// Stream edges, one entry per edge index, carrying the final weight or 1.
WeightedElements edge_elements(const Matrix& a, std::uint32_t n, bool directed, bool unit) {
  WeightedElements out;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = directed ? 1 : u + 1; v <= n; ++v)
      if (u != v && a[u][v] != 0) out.emplace_back(edge_index(u, v, n, directed), unit ? 1 : a[u][v]);
  return out;
}

// Pairs leaving the ball: {u,v} with u inside and v outside (arcs u->v when directed).
WeightedElements crossing_pairs(const std::vector<std::int64_t>& dist, std::uint32_t n, bool directed) {
  WeightedElements out;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (dist[u] >= 0 && dist[v] < 0) out.emplace_back(edge_index(u, v, n, directed), 1);
  return out;
}

// ---------------------------------------------------------------- unweighted rounds

void require_unweighted(const GraphInstance& g, const std::string& name) {
  if (g.header.model != StreamModel::turnstile && g.header.model != StreamModel::vanilla)
    throw ConfigError(name + " needs a turnstile or vanilla edge stream");
  require_source(g, name);
  for (const auto& row : final_matrix(g))
    for (auto x : row)
      if (x < 0) throw ConfigError(name + " needs nonnegative final multiplicities");
}

// Largest in-multiplicity sum; q_d values never exceed it.
std::uint64_t column_mass(const GraphInstance& g) {
  auto a = final_matrix(g);
  std::uint64_t best = 0;
  for (Vertex u = 1; u <= g.n(); ++u) {
    std::uint64_t c = 0;
    for (Vertex v = 1; v <= g.n(); ++v) c += static_cast<std::uint64_t>(a[v][u]);
    best = std::max(best, c);
  }
  return best * g.n();
}

// p_d and Q_d for the ball given as a membership vector.
void add_ball_round(ProofTranscript& t, const FieldConfig& f, const ShapeConfig& shape, const Matrix& a,
                    const std::vector<bool>& ball) {
  const std::uint32_t n = shape.n, s = shape.s, tt = shape.t, np = 2 * tt - 1;
  const auto& dom = LagrangeDomain::get(f, tt);
  std::vector<std::vector<std::uint64_t>> lag;
  for (std::uint32_t x = 1; x <= np; ++x) {
    std::vector<std::uint64_t> row;
    for (const auto& e : dom.impulse_row(f.from_u64(x))) row.push_back(e.value());
    lag.push_back(std::move(row));
  }
  auto vertex = [&](std::uint32_t x, std::uint32_t y) { return static_cast<std::uint64_t>(x - 1) * s + y; };
  std::vector<std::uint64_t> evals(static_cast<std::size_t>(np) * n, 0);
  for (std::uint32_t x = 0; x < np; ++x) {
    for (std::uint32_t y = 1; y <= s; ++y) {
      std::uint64_t bt = 0;
      for (std::uint32_t xp = 1; xp <= tt; ++xp) {
        auto v = vertex(xp, y);
        if (v <= n && ball[v]) bt = f.add(bt, lag[x][xp - 1]);
      }
      if (bt == 0) continue;
      for (std::uint32_t xp = 1; xp <= tt; ++xp) {
        auto v = vertex(xp, y);
        if (v > n) continue;
        const std::uint64_t c = f.mul(bt, lag[x][xp - 1]);
        if (c == 0) continue;
        std::uint64_t* out = &evals[static_cast<std::size_t>(x) * n];
        for (Vertex u = 1; u <= n; ++u)
          if (a[v][u]) out[u - 1] = f.add(out[u - 1], f.mul(c, f(a[v][u]).value()));
      }
    }
  }
  std::vector<Fe> ev;
  ev.reserve(evals.size());
  for (auto e : evals) ev.push_back(f.from_u64(e));
  t.add_coefficients("p", {2 * (tt - 1), n - 1}, graded_from_evaluations(f, {2 * (tt - 1), n - 1}, std::move(ev)));
  std::vector<Fe> q(n, f.zero());
  for (Vertex v = 1; v <= n; ++v)
    if (ball[v])
      for (Vertex u = 1; u <= n; ++u) q[u - 1] += f(a[v][u]);
  t.add_scalars("q", q);
}

// B_{d+1} = {source} + {u : q_d(u) != 0}.
std::vector<bool> next_ball(const Matrix& a, const std::vector<bool>& ball, Vertex src) {
  const std::size_t n = ball.size() - 1;
  std::vector<bool> out(n + 1, false);
  out[src] = true;
  for (std::size_t v = 1; v <= n; ++v)
    if (ball[v])
      for (std::size_t u = 1; u <= n; ++u)
        if (a[v][u]) out[u] = true;
  for (std::size_t v = 1; v <= n; ++v)
    if (ball[v] && !out[v]) throw std::logic_error("ball sequence is not monotone");
  return out;
}

std::vector<bool> ball_of(const std::vector<std::int64_t>& dist, std::int64_t d) {
  std::vector<bool> b(dist.size(), false);
  for (std::size_t v = 1; v < dist.size(); ++v) b[v] = dist[v] >= 0 && dist[v] <= d;
  return b;
}

// Verifier state shared by the SSSP and st-path schemes: a~(r1,y,r2) and b~_d(r1,y) for y in [s],
// plus fingerprints of the source's row and of the current ball.
class BallRounds {
 public:
  BallRounds(const InstanceHeader& h, const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        shape_(shape),
        directed_(h.directed),
        src_(source_of(h)),
        dom_t_(&LagrangeDomain::get(f, shape.t)),
        dom_n_(&LagrangeDomain::get(f, shape.n)),
        r1_(m, rng.fe_random(f)),
        r2_(m, rng.fe_random(f)),
        beta_(m, rng.fe_random(f)),
        gamma_(m, rng.fe_random(f)),
        a_(m, shape.s, f.zero()),
        b_(m, shape.s, f.zero()),
        row_(m, f.zero()),
        ball_(m, f.zero()),
        scratch_(m, 6) {}

  Vertex source() const { return src_; }
  const Fe& beta() const { return *beta_; }

  void consume(const StreamToken& tok) {
    const Fe d = (*f_)(tok.value);
    add_arc(tok.u, tok.v, d);
    if (!directed_) add_arc(tok.v, tok.u, d);
  }

  // Adds v to the ball whose table is being built.
  void add_member(Vertex v) {
    add_to_table(v);
    *ball_ += gamma_->pow(v);
  }

  // sum_v A(source, v) beta^v against the Prover's claimed multiplicities.
  void check_row(const Fe& claimed) const {
    if (claimed != *row_) throw round_reject(0, "distance-1 labels disagree with the source's adjacency row");
  }

  const Fe& ball() const { return *ball_; }
  void set_ball(const Fe& x) { *ball_ = x; }

  // Reads <p_d, Q_d>, rebuilds the table for B_{d+1} and returns its fingerprint.
  template <class OnMember>
  Fe round(TranscriptReader& proof, int d, OnMember on_member) {
    const FieldConfig& f = *f_;
    const std::uint32_t n = shape_.n;
    Fe target = f.zero();
    for (std::uint32_t y = 0; y < shape_.s; ++y) target += b_[y] * a_[y];
    b_.fill(f.zero());

    const Block& pb = proof.expect(BlockKind::coefficients, "p");
    const DegreeBounds bounds{2 * (shape_.t - 1), n - 1};
    require_bounds(pb, bounds, d);
    MonomialEnumerator en(bounds);
    Fe value = f.zero(), g = f.zero();
    for (auto item : pb.items) {
      const Fe c = read_fe(f, item, "p");
      const auto& e = en.exponents();
      value += c * r1_->pow(e[0]) * r2_->pow(e[1]);
      g += c * dom_t_->power_sum(e[0]) * beta_power_sum(e[1]);
      en.next();
    }
    if (value != target) throw round_reject(d, "p-hat(r1,r2) differs from p(r1,r2)");

    const Block& qb = proof.expect(BlockKind::scalar_list, "q");
    if (qb.items.size() != n) throw round_reject(d, "Q block must list one value per vertex");
    Fe g2 = f.zero(), next = f.zero(), bu = f.one();
    for (Vertex u = 1; u <= n; ++u) {
      const Fe q = read_fe(f, qb.items[u - 1], "q");
      bu *= *beta_;
      g2 += q * bu;
      if (!q.is_zero() || u == src_) {
        add_to_table(u);
        next += gamma_->pow(u);
        on_member(u);
      }
    }
    if (g != g2) throw round_reject(d, "fingerprint of Q differs from the fingerprint of p-hat");
    return next;
  }

 private:
  void add_arc(Vertex v, Vertex u, const Fe& d) {
    auto [x, y] = shape_vertex(v, shape_);
    a_[y - 1] += d * dom_t_->unit_impulse(x, *r1_) * dom_n_->unit_impulse(u, *r2_);
    if (v == src_) *row_ += d * beta_->pow(u);
  }

  void add_to_table(Vertex v) {
    auto [x, y] = shape_vertex(v, shape_);
    b_[y - 1] += dom_t_->unit_impulse(x, *r1_);
  }

  // sum_{u in [n]} beta^u u^k
  Fe beta_power_sum(std::uint32_t k) const {
    const FieldConfig& f = *f_;
    Fe acc = f.zero(), bu = f.one();
    for (Vertex u = 1; u <= shape_.n; ++u) {
      bu *= *beta_;
      acc += bu * f.from_u64(f.pow(u, k));
    }
    return acc;
  }

  const FieldConfig* f_;
  ShapeConfig shape_;
  bool directed_;
  Vertex src_;
  const LagrangeDomain* dom_t_;
  const LagrangeDomain* dom_n_;
  Cell<Fe> r1_, r2_, beta_, gamma_;
  MeteredVec<Fe> a_;
  MeteredVec<Fe> b_;
  Cell<Fe> row_;
  Cell<Fe> ball_;
  Lease scratch_;  // round temporaries: target, value, g, g', next, beta^u
};

// ---------------------------------------------------------------- sssp-unweighted

// D, then per vertex its label, each distance-1 label followed by its multiplicity from the source.
std::vector<std::uint64_t> label_items(const FieldConfig& f, const std::vector<std::int64_t>& dist, std::int64_t D,
                                       const Matrix& a, Vertex src) {
  std::vector<std::uint64_t> items{static_cast<std::uint64_t>(D)};
  for (std::size_t v = 1; v < dist.size(); ++v) {
    items.push_back(dist[v] < 0 ? kUnreachable : static_cast<std::uint64_t>(dist[v]));
    if (dist[v] == 1) items.push_back(a[src][v] ? f(a[src][v]).value() : 1);
  }
  return items;
}

ProofTranscript unweighted_transcript(const GraphInstance& g, const ShapeConfig& shape, const FieldConfig& f,
                                      const std::vector<std::int64_t>& claimed) {
  const Vertex src = source_of(g.header);
  const auto a = final_matrix(g);
  const auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), src);
  const std::int64_t D = max_finite(dist);
  ProofTranscript t(f.modulus());
  t.add_scalars("labels", label_items(f, claimed, D, a, src));
  for (std::int64_t d = 1; d <= D; ++d) {
    auto ball = ball_of(dist, d);
    next_ball(a, ball, src);
    add_ball_round(t, f, shape, a, ball);
  }
  return t;
}

class UnweightedVerifier : public Verifier {
 public:
  UnweightedVerifier(const InstanceHeader& h, const ShapeConfig& shape, const FieldConfig& f, Rng& rng,
                     SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        rounds_(h, shape, f, rng, m),
        phi_lease_(m, 4),
        phi_(rng.fe_random(f), rng.fe_random(f)),
        phi_hat_(phi_),
        scratch_(m, 2) {}

  void consume(const StreamToken& tok) override { rounds_.consume(tok); }

  Accepted finish(TranscriptReader& proof) override {
    const FieldConfig& f = *f_;
    const Vertex src = rounds_.source();
    const Block& lb = proof.expect(BlockKind::scalar_list, "labels");
    std::size_t i = 0;
    auto next_item = [&] {
      if (i >= lb.items.size()) throw round_reject(0, "label block too short");
      return lb.items[i++];
    };
    const std::uint64_t D = next_item();
    if (D >= n_) throw round_reject(0, "claimed radius is not below n");
    // Labels are echoed to the caller, not kept by the Verifier.
    Accepted out{static_cast<std::int64_t>(D), std::vector<std::int64_t>(n_ + 1, -1)};
    Fe row = f.zero();
    phi_.update(src, 0, f.one());
    for (Vertex v = 1; v <= n_; ++v) {
      const std::uint64_t l = next_item();
      if (l == kUnreachable) {
        if (v == src) throw round_reject(0, "source labelled unreachable");
        continue;
      }
      if (l > D) throw round_reject(0, "label exceeds the claimed radius");
      if ((v == src) != (l == 0)) throw round_reject(0, "only the source has distance 0");
      out.labels[v] = static_cast<std::int64_t>(l);
      for (std::uint64_t d = l; d <= D; ++d) phi_hat_.update(v, d, f.one());
      if (l <= 1) {
        rounds_.add_member(v);
        if (D >= 1) phi_.update(v, 1, f.one());
      }
      if (l == 1) {
        const Fe mu = read_fe(f, next_item(), "multiplicity");
        if (mu.is_zero()) throw round_reject(0, "distance-1 vertex with zero multiplicity");
        row += mu * rounds_.beta().pow(v);
      }
    }
    if (i != lb.items.size()) throw round_reject(0, "trailing items in the label block");
    rounds_.check_row(row);

    for (int d = 1; d <= static_cast<int>(D); ++d) {
      Fe next = rounds_.round(proof, d, [&](Vertex u) {
        if (static_cast<std::uint64_t>(d) + 1 <= D) phi_.update(u, d + 1, f.one());
      });
      if (d == static_cast<int>(D) && next != rounds_.ball())
        throw round_reject(d, "B_{D+1} differs from B_D: vertices beyond the claimed radius are reachable");
      rounds_.set_ball(next);
    }
    if (phi_.value() != phi_hat_.value()) throw Rejection("ball fingerprints differ: labels are not BFS distances");
    return out;
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  BallRounds rounds_;
  Lease phi_lease_;  // beta1, beta2 and the two fingerprint values
  BallFingerprint phi_;
  BallFingerprint phi_hat_;
  Lease scratch_;  // D and the row fingerprint
};

Mutation q_mutation(std::string name, bool false_zero) {
  return {std::move(name), [false_zero](const Scheme&, const GraphInstance&, const SchemeParams&,
                                        const FieldConfig& f, const ProofTranscript& honest, Rng& rng) {
            ProofTranscript t = honest;
            std::vector<std::pair<std::size_t, std::size_t>> cand;
            for (std::size_t b = 0; b < t.blocks().size(); ++b) {
              const auto& blk = t.blocks()[b];
              if (blk.label != "q") continue;
              for (std::size_t i = 0; i < blk.items.size(); ++i)
                if (!false_zero || blk.items[i] != 0) cand.emplace_back(b, i);
            }
            if (cand.empty()) throw std::logic_error("q mutation: no Q_d entries");
            auto [b, i] = cand[rng.below(cand.size())];
            auto& item = t.blocks()[b].items[i];
            item = false_zero ? 0 : f.add(item, rng.fe_random_nonzero(f).value());
            return t;
          }};
}

std::uint64_t unweighted_round_size(const ShapeConfig& sh) {
  return static_cast<std::uint64_t>(sh.n) * (2 * sh.t - 1) + sh.n;
}

class SsspUnweighted : public Scheme {
 public:
  std::string name() const override { return "sssp-unweighted"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    require_unweighted(g, name());
  }
  FieldConfig field_for(const GraphInstance& g) const override { return FieldConfig::auto_for(g.n(), column_mass(g)); }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    return unweighted_transcript(g, shape_of(p, g.n()), f,
                                 oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header)));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<UnweightedVerifier>(h, shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return {max_finite(dist), dist};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const auto sh = shape_of(p, g.n());
    const auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header));
    const std::uint64_t D = max_finite(dist);
    const std::uint64_t ones = std::count(dist.begin(), dist.end(), 1);
    return {1 + g.n() + ones + D * unweighted_round_size(sh), 2ULL * sh.s + 24};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), q_mutation("q-flip", false), q_mutation("false-zero", true),
            mutate::lie("label-decrement", [](const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                                              Rng& rng) {
              auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header));
              std::vector<Vertex> cand;
              for (Vertex v = 1; v <= g.n(); ++v)
                if (dist[v] >= 1) cand.push_back(v);
              if (cand.empty()) throw std::logic_error("label-decrement: nothing reachable");
              --dist[cand[rng.below(cand.size())]];
              return unweighted_transcript(g, shape_of(p, g.n()), f, dist);
            })};
  }
};

// ---------------------------------------------------------------- stpath

Vertex target_of(const InstanceHeader& h) {
  if (!h.target) throw ConfigError("stpath needs a target vertex");
  return *h.target;
}

class StPathVerifier : public Verifier {
 public:
  StPathVerifier(const InstanceHeader& h, const ShapeConfig& shape, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f), n_(h.n), target_(target_of(h)), rounds_(h, shape, f, rng, m), scratch_(m, 2) {}

  void consume(const StreamToken& tok) override { rounds_.consume(tok); }

  Accepted finish(TranscriptReader& proof) override {
    const FieldConfig& f = *f_;
    const Vertex src = rounds_.source();
    const Block& b1 = proof.expect(BlockKind::scalar_list, "ball1");
    if (b1.items.size() % 2) throw round_reject(0, "ball1 holds (vertex, multiplicity) pairs");
    rounds_.add_member(src);
    Fe row = f.zero();
    Vertex last = 0;
    bool found = false;
    for (std::size_t i = 0; i < b1.items.size(); i += 2) {
      const Vertex v = read_vertex(b1.items[i], n_, "ball1");
      if (v <= last || v == src) throw round_reject(0, "ball1 vertices must be increasing and exclude the source");
      last = v;
      const Fe mu = read_fe(f, b1.items[i + 1], "multiplicity");
      if (mu.is_zero()) throw round_reject(0, "distance-1 vertex with zero multiplicity");
      row += mu * rounds_.beta().pow(v);
      rounds_.add_member(v);
      found |= v == target_;
    }
    rounds_.check_row(row);
    if (target_ == src) return {0, {}};
    if (found) return {1, {}};
    if (b1.items.empty()) return {-1, {}};
    for (int d = 1; d <= static_cast<int>(n_); ++d) {
      bool hit = false;
      Fe next = rounds_.round(proof, d, [&](Vertex u) { hit |= u == target_; });
      if (hit) return {d + 1, {}};
      if (next == rounds_.ball()) return {-1, {}};
      rounds_.set_ball(next);
    }
    throw Rejection("balls kept growing past n rounds");
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  Vertex target_;
  BallRounds rounds_;
  Lease scratch_;  // row fingerprint and the last ball1 vertex
};

// Rounds needed: K-1 when the target is reachable at K >= 2; otherwise until the balls stop growing.
std::int64_t stpath_rounds(const std::vector<std::int64_t>& dist, Vertex target) {
  const std::int64_t K = dist[target];
  if (K >= 0) return std::max<std::int64_t>(K - 1, 0);
  return max_finite(dist);
}

class StPath : public Scheme {
 public:
  std::string name() const override { return "stpath"; }
  void check_instance(const GraphInstance& g, const SchemeParams& p) const override {
    shape_of(p, g.n());
    require_unweighted(g, name());
    const Vertex t = target_of(g.header);
    if (t < 1 || t > g.n()) throw ConfigError("stpath: target outside [1,n]");
  }
  FieldConfig field_for(const GraphInstance& g) const override { return FieldConfig::auto_for(g.n(), column_mass(g)); }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const override {
    const auto shape = shape_of(p, g.n());
    const Vertex src = source_of(g.header);
    const auto a = final_matrix(g);
    const auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), src);
    ProofTranscript t(f.modulus());
    std::vector<std::uint64_t> ball1;
    for (Vertex v = 1; v <= g.n(); ++v)
      if (dist[v] == 1) {
        ball1.push_back(v);
        ball1.push_back(f(a[src][v]).value());
      }
    t.add_scalars("ball1", ball1);
    const Vertex target = target_of(g.header);
    if (target == src) return t;
    const std::int64_t rounds = stpath_rounds(dist, target);
    for (std::int64_t d = 1; d <= rounds; ++d) add_ball_round(t, f, shape, a, ball_of(dist, d));
    return t;
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<StPathVerifier>(h, shape_of(p, h.n), f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return {dist[target_of(g.header)], {}};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const override {
    const auto sh = shape_of(p, g.n());
    const auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), source_of(g.header));
    const std::uint64_t ones = std::count(dist.begin(), dist.end(), 1);
    const Vertex target = target_of(g.header);
    const std::uint64_t rounds = target == source_of(g.header) ? 0 : stpath_rounds(dist, target);
    return {2 * ones + rounds * unweighted_round_size(sh), 2ULL * sh.s + 24};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(), q_mutation("q-flip", false), q_mutation("false-zero", true)};
  }
};

// ---------------------------------------------------------------- weighted shared pieces

void require_weights(const GraphInstance& g, const std::string& name) {
  require_source(g, name);
  if (g.header.W < 1) throw ConfigError(name + " needs W >= 1");
  for (const auto& row : final_matrix(g))
    for (auto x : row)
      if (x < 0 || x > g.header.W) throw ConfigError(name + ": final edge weights must lie in [0,W]");
}

// Field above W^2 n^3, which bounds D W n^2 because D <= W(n-1).
FieldConfig weighted_field(const GraphInstance& g) {
  const std::uint64_t n = g.n(), W = static_cast<std::uint64_t>(g.header.W);
  return FieldConfig::auto_for(n, W * W * n * n * n);
}

// Evaluates a univariate block at r and at every vertex u with outside[u]; vals receives the latter.
Fe eval_everywhere(const FieldConfig& f, const Block& b, const Fe& r, const std::vector<bool>& outside,
                   MeteredVec<Fe>& vals, MeteredVec<Fe>& pows) {
  const std::uint32_t n = static_cast<std::uint32_t>(vals.size());
  vals.fill(f.zero());
  pows.fill(f.one());
  Fe value = f.zero(), rp = f.one();
  for (auto item : b.items) {
    const Fe c = read_fe(f, item, b.label);
    value += c * rp;
    rp *= r;
    for (Vertex u = 1; u <= n; ++u) {
      if (!outside[u]) continue;
      vals[u - 1] += c * pows[u - 1];
      pows[u - 1] *= f.from_u64(u);
    }
  }
  return value;
}

// ---------------------------------------------------------------- sssp-wturnstile

// Degree W(n-1) polynomial p_d(U) = sum_{v in B_d} delta_{w(v)}(A~(v,U)), one per round d = 0..D-1.
std::vector<std::vector<Fe>> turnstile_polys(const FieldConfig& f, const Matrix& a, std::uint32_t n, std::int64_t W,
                                             const std::vector<std::int64_t>& dist, std::int64_t D) {
  const std::uint64_t deg = static_cast<std::uint64_t>(W) * (n - 1), npts = deg + 1;
  const auto& dom_n = LagrangeDomain::get(f, n);
  const auto& sel = LagrangeDomain::get(f, static_cast<std::uint64_t>(W) + 1, 0);
  // at[x][v] = A~(v, x)
  std::vector<std::vector<Fe>> at(npts, std::vector<Fe>(n + 1, f.zero()));
  for (std::uint64_t x = 1; x <= npts; ++x) {
    auto row = dom_n.impulse_row(f.from_u64(x));
    for (Vertex v = 1; v <= n; ++v)
      for (Vertex u = 1; u <= n; ++u)
        if (a[v][u]) at[x - 1][v] += f(a[v][u]) * row[u - 1];
  }
  std::vector<std::vector<Fe>> out;
  for (std::int64_t d = 0; d < D; ++d) {
    std::vector<Fe> evals(npts, f.zero());
    for (std::uint64_t x = 0; x < npts; ++x)
      for (Vertex v = 1; v <= n; ++v) {
        if (dist[v] < 0 || dist[v] > d || d + 1 - dist[v] > W) continue;
        evals[x] += sel.unit_impulse(d + 1 - dist[v], at[x][v]);
      }
    out.push_back(graded_from_evaluations(f, {static_cast<std::uint32_t>(deg)}, std::move(evals)));
  }
  return out;
}

ProofTranscript wturnstile_transcript(const GraphInstance& g, const FieldConfig& f, std::int64_t D_claim) {
  const std::uint32_t n = g.n();
  const auto a = final_matrix(g);
  const auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
  const auto deg = static_cast<std::uint32_t>(g.header.W * (n - 1));
  ProofTranscript t(f.modulus());
  t.add_scalars("rounds", std::vector<std::uint64_t>{static_cast<std::uint64_t>(D_claim)});
  for (auto& p : turnstile_polys(f, a, n, g.header.W, sp.dist, D_claim)) t.add_coefficients("p", {deg}, p);
  auto ball = sp.dist;
  for (auto& x : ball)
    if (x > D_claim) x = -1;
  const std::uint64_t h = set_scheme_h(static_cast<std::uint64_t>(n) * n, n);
  auto cross = set_scheme_poly(f, static_cast<std::uint64_t>(n) * n, n, edge_elements(a, n, g.header.directed, false),
                               crossing_pairs(ball, n, g.header.directed));
  t.add_coefficients("cross", {static_cast<std::uint32_t>(2 * (h - 1))}, cross);
  return t;
}

class WTurnstileVerifier : public Verifier {
 public:
  WTurnstileVerifier(const InstanceHeader& h, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        W_(h.W),
        directed_(h.directed),
        src_(source_of(h)),
        dom_n_(&LagrangeDomain::get(f, h.n)),
        sel_(&LagrangeDomain::get(f, static_cast<std::uint64_t>(h.W) + 1, 0)),
        r_(m, rng.fe_random(f)),
        at_(m, h.n, f.zero()),
        dist_(m, h.n + 1, -1),
        vals_(m, h.n, f.zero()),
        pows_(m, h.n, f.zero()),
        cross_(f, static_cast<std::uint64_t>(h.n) * h.n, h.n, rng, m),
        scratch_(m, 4) {}

  void consume(const StreamToken& tok) override {
    const Fe d = (*f_)(tok.value);
    at_[tok.u - 1] += d * dom_n_->unit_impulse(tok.v, *r_);
    if (!directed_) at_[tok.v - 1] += d * dom_n_->unit_impulse(tok.u, *r_);
    cross_.add_s(edge_index(tok.u, tok.v, n_, directed_), d);
  }

  Accepted finish(TranscriptReader& proof) override {
    const FieldConfig& f = *f_;
    const Block& rb = proof.expect(BlockKind::scalar_list, "rounds");
    if (rb.items.size() != 1) throw round_reject(0, "rounds block holds the claimed radius only");
    const std::uint64_t deg = static_cast<std::uint64_t>(W_) * (n_ - 1);
    if (rb.items[0] > deg) throw round_reject(0, "claimed radius exceeds W(n-1)");
    const auto D = static_cast<std::int64_t>(rb.items[0]);
    dist_[src_] = 0;
    std::vector<bool> outside(n_ + 1, false);
    for (std::int64_t d = 0; d < D; ++d) {
      const int rd = static_cast<int>(d);
      const Block& pb = proof.expect(BlockKind::coefficients, "p");
      require_bounds(pb, {static_cast<std::uint32_t>(deg)}, rd);
      Fe target = f.zero();
      for (Vertex v = 1; v <= n_; ++v) {
        outside[v] = dist_[v] < 0;
        if (dist_[v] < 0 || d + 1 - dist_[v] > W_) continue;
        target += sel_->unit_impulse(d + 1 - dist_[v], at_[v - 1]);
      }
      if (eval_everywhere(f, pb, *r_, outside, vals_, pows_) != target)
        throw round_reject(rd, "p-hat(r) differs from p(r)");
      for (Vertex u = 1; u <= n_; ++u)
        if (outside[u] && !vals_[u - 1].is_zero()) dist_[u] = d + 1;
    }
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v = 1; v <= n_; ++v)
        if (dist_[u] >= 0 && dist_[v] < 0) cross_.add_t(edge_index(u, v, n_, directed_), f.one());
    if (!cross_.finish(proof.expect(BlockKind::coefficients, "cross")).is_zero())
      throw Rejection("edges leave B_D: some vertex beyond the claimed radius is reachable");
    Accepted out{0, std::vector<std::int64_t>(n_ + 1, -1)};
    for (Vertex v = 1; v <= n_; ++v) out.labels[v] = dist_[v];
    out.value = max_finite(out.labels);
    return out;
  }

 private:
  const FieldConfig* f_;
  std::uint32_t n_;
  std::int64_t W_;
  bool directed_;
  Vertex src_;
  const LagrangeDomain* dom_n_;
  const LagrangeDomain* sel_;
  Cell<Fe> r_;
  MeteredVec<Fe> at_;
  MeteredVec<std::int64_t> dist_;
  MeteredVec<Fe> vals_;
  MeteredVec<Fe> pows_;
  SetSchemeVerifier cross_;
  Lease scratch_;  // D, target, p-hat(r), r^k
};

std::vector<const LagrangeDomain*> cross_domains(const FieldConfig& f, const Block& b) {
  return {&LagrangeDomain::get(f, b.bounds[0] / 2 + 1)};
}

class SsspWTurnstile : public Scheme {
 public:
  std::string name() const override { return "sssp-wturnstile"; }
  void check_instance(const GraphInstance& g, const SchemeParams&) const override {
    if (g.header.model != StreamModel::turnstile) throw ConfigError(name() + " needs a turnstile weight stream");
    require_weights(g, name());
  }
  FieldConfig field_for(const GraphInstance& g) const override { return weighted_field(g); }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams&, const FieldConfig& f) const override {
    auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return wturnstile_transcript(g, f, max_finite(sp.dist));
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams&, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<WTurnstileVerifier>(h, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return {max_finite(sp.dist), sp.dist};
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams&) const override {
    const std::uint64_t n = g.n(), W = static_cast<std::uint64_t>(g.header.W);
    const std::uint64_t D = oracle_output(g).value;
    return {1 + D * (W * (n - 1) + 1) + 2 * n - 1, 6 * n + 16};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            {"early-stop", [](const Scheme&, const GraphInstance& g, const SchemeParams&, const FieldConfig& f,
                              const ProofTranscript& honest, Rng& rng) {
               // One round short, with the cross polynomial shifted so it claims no edge leaves the ball.
               const auto D = static_cast<std::int64_t>(honest.blocks()[0].items[0]);
               if (D == 0) throw std::logic_error("early-stop: nothing to cut");
               auto t = wturnstile_transcript(g, f, D - 1);
               Block& cross = t.blocks().back();
               auto doms = cross_domains(f, cross);
               Fe sum = f.zero();
               for (std::uint64_t x = 1; x <= doms[0]->size(); ++x)
                 sum += coeffs_eval(cross.bounds, to_fe_vec(f, cross.items), {f.from_u64(x)});
               mutate::shift_block_sum(cross, f, doms, -sum, rng);
               return t;
             }}};
  }

 private:
  static std::vector<Fe> to_fe_vec(const FieldConfig& f, const std::vector<std::uint64_t>& items) {
    std::vector<Fe> out;
    for (auto x : items) out.push_back(f.from_u64(x));
    return out;
  }
};

// ---------------------------------------------------------------- sssp-wvanilla

void require_vanilla_weights(const GraphInstance& g, const std::string& name) {
  if (g.header.model != StreamModel::weighted) throw ConfigError(name + " needs a weighted vanilla stream");
  require_weights(g, name);
  std::vector<std::vector<bool>> seen(g.n() + 1, std::vector<bool>(g.n() + 1, false));
  for (const auto& tok : g.tokens) {
    Vertex u = tok.u, v = tok.v;
    if (!g.header.directed && u > v) std::swap(u, v);
    if (seen[u][v]) throw ConfigError(name + ": edge " + std::to_string(u) + "-" + std::to_string(v) + " repeats");
    seen[u][v] = true;
  }
}

ProofTranscript wvanilla_transcript(const GraphInstance& g, const FieldConfig& f, const std::vector<std::int64_t>& dist,
                                    const std::vector<Vertex>& prev) {
  const std::uint32_t n = g.n();
  const std::int64_t W = g.header.W;
  const bool directed = g.header.directed;
  const auto a = final_matrix(g);
  ProofTranscript t(f.modulus());
  std::vector<std::uint64_t> dl, pl;
  for (Vertex v = 1; v <= n; ++v) {
    dl.push_back(dist[v] < 0 ? kUnreachable : static_cast<std::uint64_t>(dist[v]));
    pl.push_back(prev[v]);
  }
  t.add_scalars("dist", dl);
  t.add_scalars("prev", pl);
  const std::int64_t D = max_finite(dist);
  for (std::int64_t d = 0; d < D; ++d) {
    std::vector<Fe> evals(n, f.zero());
    for (Vertex v = 1; v <= n; ++v) {
      if (dist[v] < 0 || dist[v] > d) continue;
      for (Vertex u = 1; u <= n; ++u)
        if (a[v][u] == d + 1 - dist[v]) evals[u - 1] += f.one();
    }
    t.add_coefficients("p", {n - 1}, graded_from_evaluations(f, {n - 1}, std::move(evals)));
  }
  const std::uint64_t tree_universe = static_cast<std::uint64_t>(n) * n * static_cast<std::uint64_t>(W);
  WeightedElements claimed, stream;
  for (Vertex v = 1; v <= n; ++v) {
    if (!prev[v]) continue;
    const std::int64_t w = dist[v] - dist[prev[v]];
    if (w >= 1 && w <= W) claimed.emplace_back(weighted_index(prev[v], v, w, n, directed, W), 1);
  }
  for (const auto& tok : g.tokens) stream.emplace_back(weighted_index(tok.u, tok.v, tok.value, n, directed, W), 1);
  const std::uint64_t ht = set_scheme_h(tree_universe, n);
  t.add_coefficients("tree", {static_cast<std::uint32_t>(2 * (ht - 1))},
                     set_scheme_poly(f, tree_universe, n, claimed, stream));
  const std::uint64_t hc = set_scheme_h(static_cast<std::uint64_t>(n) * n, n);
  t.add_coefficients("cross", {static_cast<std::uint32_t>(2 * (hc - 1))},
                     set_scheme_poly(f, static_cast<std::uint64_t>(n) * n, n, edge_elements(a, n, directed, true),
                                     crossing_pairs(dist, n, directed)));
  return t;
}

class WVanillaVerifier : public Verifier {
 public:
  WVanillaVerifier(const InstanceHeader& h, const FieldConfig& f, Rng& rng, SpaceMeter& m)
      : f_(&f),
        n_(h.n),
        W_(h.W),
        directed_(h.directed),
        src_(source_of(h)),
        dom_n_(&LagrangeDomain::get(f, h.n)),
        r_(m, rng.fe_random(f)),
        ftab_(m, static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.W), f.zero()),
        dist_(m, h.n + 1, -1),
        vals_(m, h.n, f.zero()),
        pows_(m, h.n, f.zero()),
        tree_(f, static_cast<std::uint64_t>(h.n) * h.n * static_cast<std::uint64_t>(h.W), h.n, rng, m),
        cross_(f, static_cast<std::uint64_t>(h.n) * h.n, h.n, rng, m),
        scratch_(m, 4) {}

  void consume(const StreamToken& tok) override {
    const std::int64_t w = tok.value;
    if (w < 1 || w > W_) throw Rejection("stream weight outside [1,W]");
    ftab_[cell(tok.u, w)] += dom_n_->unit_impulse(tok.v, *r_);
    if (!directed_) ftab_[cell(tok.v, w)] += dom_n_->unit_impulse(tok.u, *r_);
    tree_.add_t(weighted_index(tok.u, tok.v, w, n_, directed_, W_), f_->one());
    cross_.add_s(edge_index(tok.u, tok.v, n_, directed_), f_->one());
  }

  Accepted finish(TranscriptReader& proof) override {
    const FieldConfig& f = *f_;
    const std::int64_t max_dist = W_ * (n_ - 1);
    const Block& db = proof.expect(BlockKind::scalar_list, "dist");
    if (db.items.size() != n_) throw round_reject(0, "dist block must list one label per vertex");
    std::int64_t D = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      const std::uint64_t l = db.items[v - 1];
      if (l == kUnreachable) continue;
      if (l > static_cast<std::uint64_t>(max_dist)) throw round_reject(0, "label exceeds W(n-1)");
      if ((v == src_) != (l == 0)) throw round_reject(0, "only the source has distance 0");
      dist_[v] = static_cast<std::int64_t>(l);
      D = std::max(D, dist_[v]);
    }
    if (dist_[src_] != 0) throw round_reject(0, "source labelled unreachable");

    const Block& pb0 = proof.expect(BlockKind::scalar_list, "prev");
    if (pb0.items.size() != n_) throw round_reject(0, "prev block must list one parent per vertex");
    Accepted out{D, std::vector<std::int64_t>(n_ + 1, -1), std::vector<std::int64_t>(n_ + 1, 0)};
    Fe tree_edges = f.zero();
    for (Vertex v = 1; v <= n_; ++v) {
      out.labels[v] = dist_[v];
      const std::uint64_t p = pb0.items[v - 1];
      if (v == src_ || dist_[v] < 0) {
        if (p != 0) throw round_reject(0, "source and unreachable vertices have no parent");
        continue;
      }
      const Vertex u = read_vertex(p, n_, "prev");
      const std::int64_t w = dist_[v] - dist_[u];
      if (dist_[u] < 0 || w < 1 || w > W_) throw round_reject(0, "parent label implies a weight outside [1,W]");
      tree_.add_s(weighted_index(u, v, w, n_, directed_, W_), f.one());
      tree_edges += f.one();
      out.prev[v] = u;
    }

    std::vector<bool> outside(n_ + 1, false);
    for (std::int64_t d = 0; d < D; ++d) {
      const int rd = static_cast<int>(d);
      const Block& pb = proof.expect(BlockKind::coefficients, "p");
      require_bounds(pb, {n_ - 1}, rd);
      Fe target = f.zero();
      for (Vertex v = 1; v <= n_; ++v) {
        outside[v] = dist_[v] < 0 || dist_[v] > d;
        if (outside[v] || d + 1 - dist_[v] > W_) continue;
        target += ftab_[cell(v, d + 1 - dist_[v])];
      }
      if (eval_everywhere(f, pb, *r_, outside, vals_, pows_) != target)
        throw round_reject(rd, "p-hat(r) differs from p(r)");
      for (Vertex u = 1; u <= n_; ++u)
        if (outside[u] && vals_[u - 1].is_zero() == (dist_[u] == d + 1))
          throw round_reject(rd, "labels disagree with the vertices first reached in this round");
    }

    if (tree_.finish(proof.expect(BlockKind::coefficients, "tree")) != tree_edges)
      throw Rejection("parent edges are not all stream edges with the implied weights");
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v = 1; v <= n_; ++v)
        if (dist_[u] >= 0 && dist_[v] < 0) cross_.add_t(edge_index(u, v, n_, directed_), f.one());
    if (!cross_.finish(proof.expect(BlockKind::coefficients, "cross")).is_zero())
      throw Rejection("edges leave the labelled ball: some unreachable label is wrong");
    return out;
  }

 private:
  std::size_t cell(Vertex v, std::int64_t w) const {
    return static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(W_) + static_cast<std::size_t>(w - 1);
  }

  const FieldConfig* f_;
  std::uint32_t n_;
  std::int64_t W_;
  bool directed_;
  Vertex src_;
  const LagrangeDomain* dom_n_;
  Cell<Fe> r_;
  MeteredVec<Fe> ftab_;  // f~(v, r, w)
  MeteredVec<std::int64_t> dist_;
  MeteredVec<Fe> vals_;
  MeteredVec<Fe> pows_;
  SetSchemeVerifier tree_;
  SetSchemeVerifier cross_;
  Lease scratch_;  // D, parent-edge count, target, p-hat(r)
};

bool valid_tree(const GraphInstance& g, const Accepted& out) {
  const auto a = final_matrix(g);
  const Vertex src = source_of(g.header);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (v == src || out.labels[v] < 0) {
      if (out.prev[v] != 0) return false;
      continue;
    }
    const auto u = out.prev[v];
    if (u < 1 || u > g.n() || a[u][v] == 0 || out.labels[u] + a[u][v] != out.labels[v]) return false;
  }
  return true;
}

class SsspWVanilla : public Scheme {
 public:
  std::string name() const override { return "sssp-wvanilla"; }
  void check_instance(const GraphInstance& g, const SchemeParams&) const override {
    require_vanilla_weights(g, name());
  }
  FieldConfig field_for(const GraphInstance& g) const override { return weighted_field(g); }
  ProofTranscript prove(const GraphInstance& g, const SchemeParams&, const FieldConfig& f) const override {
    auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return wvanilla_transcript(g, f, sp.dist, sp.prev);
  }
  std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams&, const FieldConfig& f,
                                          Rng& rng, SpaceMeter& m) const override {
    return std::make_unique<WVanillaVerifier>(h, f, rng, m);
  }
  Accepted oracle_output(const GraphInstance& g) const override {
    auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
    return {max_finite(sp.dist), sp.dist, std::vector<std::int64_t>(sp.prev.begin(), sp.prev.end())};
  }
  // Any shortest-path tree is a correct answer.
  bool matches_oracle(const GraphInstance& g, const Accepted& out) const override {
    const auto truth = oracle_output(g);
    return out.value == truth.value && out.labels == truth.labels && out.prev.size() == truth.prev.size() &&
           valid_tree(g, out);
  }
  CostBounds cost_bounds(const GraphInstance& g, const SchemeParams&) const override {
    const std::uint64_t n = g.n(), W = static_cast<std::uint64_t>(g.header.W);
    const std::uint64_t D = oracle_output(g).value;
    return {2 * n + D * n + (2 * n * W - 1) + (2 * n - 1), W * n + 7 * n + 16};
  }
  std::vector<Mutation> mutations() const override {
    return {mutate::coeff_flip(), mutate::truncate(),
            mutate::lie("bad-prev", [](const GraphInstance& g, const SchemeParams&, const FieldConfig& f, Rng& rng) {
              // Re-point one parent at a vertex that is not a neighbor with the implied weight.
              auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
              const auto a = final_matrix(g);
              std::vector<std::pair<Vertex, Vertex>> cand;
              for (Vertex v = 1; v <= g.n(); ++v) {
                if (sp.prev[v] == 0) continue;
                for (Vertex u = 1; u <= g.n(); ++u) {
                  const std::int64_t w = sp.dist[v] - sp.dist[u];
                  if (u != v && sp.dist[u] >= 0 && w >= 1 && w <= g.header.W && a[u][v] != w) cand.emplace_back(v, u);
                }
              }
              if (cand.empty()) throw std::logic_error("bad-prev: no alternative parent");
              auto [v, u] = cand[rng.below(cand.size())];
              sp.prev[v] = u;
              return wvanilla_transcript(g, f, sp.dist, sp.prev);
            }),
            mutate::lie("dist-decrement", [](const GraphInstance& g, const SchemeParams&, const FieldConfig& f,
                                             Rng& rng) {
              auto sp = oracle::dijkstra(oracle::DenseGraph::from_instance(g), source_of(g.header));
              std::vector<Vertex> cand;
              for (Vertex v = 1; v <= g.n(); ++v)
                if (sp.dist[v] >= 2) cand.push_back(v);
              if (cand.empty()) throw std::logic_error("dist-decrement: no vertex at distance >= 2");
              --sp.dist[cand[rng.below(cand.size())]];
              return wvanilla_transcript(g, f, sp.dist, sp.prev);
            })};
  }
};

}  // namespace

std::unique_ptr<Scheme> make_sssp_unweighted() { return std::make_unique<SsspUnweighted>(); }
std::unique_ptr<Scheme> make_stpath() { return std::make_unique<StPath>(); }
std::unique_ptr<Scheme> make_sssp_wturnstile() { return std::make_unique<SsspWTurnstile>(); }
std::unique_ptr<Scheme> make_sssp_wvanilla() { return std::make_unique<SsspWVanilla>(); }

}  // namespace adsv
