#include "adsv/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace adsv {

SchemeParams resolve_params(SchemeParams p, std::uint32_t n) {
  if (n == 0) throw ConfigError("instance has no vertices");
  if (p.t == 0 && p.s == 0) p.t = 1;
  if (p.s == 0) p.s = (n + p.t - 1) / p.t;
  if (p.t == 0) p.t = (n + p.s - 1) / p.s;
  if (static_cast<std::uint64_t>(p.t) * p.s < n) {
    throw ConfigError("shaping needs t*s >= n (t=" + std::to_string(p.t) + ", s=" + std::to_string(p.s) + ")");
  }
  return p;
}

ShapeConfig shape_of(const SchemeParams& p, std::uint32_t n) {
  auto r = resolve_params(p, n);
  return ShapeConfig(n, r.t, r.s);
}

Fe read_fe(const FieldConfig& f, std::uint64_t item, const std::string& what) {
  if (item >= f.modulus()) throw Rejection(what + ": value outside the field");
  return f.from_u64(item);
}

Vertex read_vertex(std::uint64_t item, std::uint32_t n, const std::string& what) {
  if (item < 1 || item > n) throw Rejection(what + ": vertex id outside [1,n]");
  return static_cast<Vertex>(item);
}

PolyCheck read_poly(const Block& b, const DegreeBounds& expected, const std::vector<Fe>& point,
                    const std::vector<const LagrangeDomain*>& domains, const FieldConfig& f) {
  if (b.bounds != expected) throw Rejection("block '" + b.label + "' declares unexpected degree bounds");
  if (b.items.size() != block_size(expected)) throw Rejection("block '" + b.label + "' has wrong length");
  StreamingPolyEval ev(expected, point, domains);
  for (auto item : b.items) ev.push(read_fe(f, item, b.label));
  return {ev.value(), ev.grid_sum()};
}

std::vector<const LagrangeDomain*> uniform_domains(const FieldConfig& f, const Block& b, std::uint64_t size) {
  return std::vector<const LagrangeDomain*>(b.bounds.size(), &LagrangeDomain::get(f, size));
}

VerifierOutcome verify(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                       const ProofTranscript& proof, std::uint64_t seed, std::uint64_t meter_limit) {
  SpaceMeter meter(meter_limit);
  Rng rng = Rng(seed).sub("verifier");
  VerifierOutcome out;
  {
    auto v = scheme.make_verifier(g.header, p, f, rng, meter);
    try {
      if (proof.modulus() != f.modulus()) throw Rejection("transcript field modulus mismatch");
      for (const auto& tok : g.tokens) v->consume(tok);
      if (scheme.reads_set_stream())
        for (const auto& tok : set_stream(g)) v->consume(tok);
      TranscriptReader reader(proof);
      out.output = v->finish(reader);
      if (!reader.at_end()) throw Rejection("unread trailing transcript blocks");
      out.accepted = true;
    } catch (const Rejection& r) {
      out.accepted = false;
      out.output = {};
      out.reject_reason = r.check();
      out.reject_round = r.round();
    }
  }
  out.vcost_elements = meter.peak();
  out.vcost_bits = meter.peak() * f.bits();
  return out;
}

RunResult run_honest(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, std::uint64_t seed) {
  scheme.check_instance(g, p);
  FieldConfig f = scheme.field_for(g);
  RunResult r;
  r.bounds = scheme.cost_bounds(g, p);
  r.transcript = scheme.prove(g, p, f);
  r.outcome = verify(scheme, g, p, f, r.transcript, seed, r.bounds.vcost);
  return r;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double ph = successes / n;
  const double denom = 1 + z * z / n;
  const double centre = (ph + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TrialStats run_adversarial(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p,
                           const Mutation& mutation, std::uint64_t trials, std::uint64_t seed) {
  scheme.check_instance(g, p);
  const FieldConfig f = scheme.field_for(g);
  const ProofTranscript honest = scheme.prove(g, p, f);
  const Rng adversary = Rng(seed).sub("adversary");
  const Rng verifier_seeds = Rng(seed).sub("trials");
  // Trial i depends only on i, so the split across workers does not change the totals.
  auto run_slice = [&](std::uint64_t first, std::uint64_t stride) {
    TrialStats st;
    for (std::uint64_t i = first; i < trials; i += stride) {
      Rng arng = adversary.sub(std::to_string(i));
      ProofTranscript bad = mutation.apply(scheme, g, p, f, honest, arng);
      Rng vs = verifier_seeds.sub(std::to_string(i));
      VerifierOutcome o = verify(scheme, g, p, f, bad, vs.next());
      ++st.trials;
      if (!o.accepted) ++st.rejects;
      else if (scheme.matches_oracle(g, o.output)) ++st.accepts_correct;
      else ++st.accepts_wrong;
    }
    return st;
  };
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(trials / 16, 1));
  if (workers == 1) return run_slice(0, 1);
  std::vector<std::future<TrialStats>> parts;
  for (std::uint64_t w = 0; w < workers; ++w) parts.push_back(std::async(std::launch::async, run_slice, w, workers));
  TrialStats total;
  for (auto& part : parts) {
    TrialStats st = part.get();
    total.trials += st.trials;
    total.accepts_correct += st.accepts_correct;
    total.accepts_wrong += st.accepts_wrong;
    total.rejects += st.rejects;
  }
  return total;
}

CostRow cost_row(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, const RunResult& r,
                 const FieldConfig& f) {
  const SchemeParams rp = resolve_params(p, g.n());
  CostRow row{scheme.name(), g.n(), rp.t, rp.s, r.transcript.element_count(), r.outcome.vcost_elements, 0, 0, 0};
  row.hbits = row.hcost_elems * f.bits();
  row.vbits = row.vcost_elems * f.bits();
  row.product_bits = row.hbits * row.vbits;
  return row;
}

std::string cost_csv_header() { return "scheme,n,t,s,hcost_elems,vcost_elems,hbits,vbits,product_bits"; }

std::string to_csv(const CostRow& r) {
  std::ostringstream o;
  o << r.scheme << ',' << r.n << ',' << r.t << ',' << r.s << ',' << r.hcost_elems << ',' << r.vcost_elems << ','
    << r.hbits << ',' << r.vbits << ',' << r.product_bits;
  return o.str();
}

namespace mutate {

Mutation coeff_flip(std::function<bool(const std::string&)> filter) {
  return {"coeff-flip", [filter](const Scheme&, const GraphInstance&, const SchemeParams&, const FieldConfig& f,
                                 const ProofTranscript& honest, Rng& rng) {
            ProofTranscript t = honest;
            std::vector<std::size_t> cand;
            for (std::size_t i = 0; i < t.blocks().size(); ++i) {
              const auto& b = t.blocks()[i];
              if (b.kind == BlockKind::coefficients && !b.items.empty() && (!filter || filter(b.label))) {
                cand.push_back(i);
              }
            }
            if (cand.empty()) throw std::logic_error("coeff-flip: no coefficient block");
            auto& b = t.blocks()[cand[rng.below(cand.size())]];
            auto& item = b.items[rng.below(b.items.size())];
            item = f.add(item, rng.fe_random_nonzero(f).value());
            return t;
          }};
}

Mutation truncate() {
  return {"truncate", [](const Scheme&, const GraphInstance&, const SchemeParams&, const FieldConfig&,
                         const ProofTranscript& honest, Rng& rng) {
            ProofTranscript t = honest;
            std::vector<std::size_t> cand;
            for (std::size_t i = 0; i < t.blocks().size(); ++i)
              if (!t.blocks()[i].items.empty()) cand.push_back(i);
            if (cand.empty()) throw std::logic_error("truncate: empty transcript");
            t.blocks()[cand[rng.below(cand.size())]].items.pop_back();
            return t;
          }};
}

void shift_block_sum(Block& b, const FieldConfig& f, const std::vector<const LagrangeDomain*>& domains,
                     const Fe& delta, Rng& rng) {
  const std::size_t k = b.bounds.size();
  Fe count = f.one();
  for (auto* d : domains) count *= f.from_u64(d->size());
  std::size_t var = k;
  for (std::size_t i = 0; i < k; ++i)
    if (b.bounds[i] >= 1) {
      var = i;
      break;
    }
  if (var == k) {
    // Constant polynomial: the shift cannot be hidden at all.
    b.items[0] = (f.from_u64(b.items[0]) + delta * count.inv()).value();
    return;
  }
  // Sum over the grid of (X_var - z) = (sum_x x - z*|D_var|) * prod_{i != var} |D_i|.
  Fe others = count * f.from_u64(domains[var]->size()).inv();
  Fe z, denom;
  do {
    z = rng.fe_random(f);
    denom = (domains[var]->power_sum(1) - z * f.from_u64(domains[var]->size())) * others;
  } while (denom.is_zero());
  Fe c = delta * denom.inv();
  MonomialEnumerator en(b.bounds);
  std::size_t idx = 0;
  do {
    const auto& e = en.exponents();
    bool is_const = true, is_var = true;
    for (std::size_t i = 0; i < k; ++i) {
      is_const &= e[i] == 0;
      is_var &= e[i] == (i == var ? 1u : 0u);
    }
    if (is_const) b.items[idx] = (f.from_u64(b.items[idx]) - c * z).value();
    if (is_var) b.items[idx] = (f.from_u64(b.items[idx]) + c).value();
    ++idx;
  } while (idx < b.items.size() && en.next());
}

Mutation shift_sum(std::string label, std::int64_t delta,
                   std::function<std::vector<const LagrangeDomain*>(const FieldConfig&, const Block&)> domains) {
  return {"shift-sum", [label, delta, domains](const Scheme&, const GraphInstance&, const SchemeParams&,
                                               const FieldConfig& f, const ProofTranscript& honest, Rng& rng) {
            ProofTranscript t = honest;
            for (auto& b : t.blocks()) {
              if (b.kind == BlockKind::coefficients && b.label == label) {
                shift_block_sum(b, f, domains(f, b), f(delta), rng);
                return t;
              }
            }
            throw std::logic_error("shift-sum: no block '" + label + "'");
          }};
}

Mutation lie(std::string name, std::function<ProofTranscript(const GraphInstance&, const SchemeParams&,
                                                             const FieldConfig&, Rng&)> prover) {
  return {std::move(name), [prover](const Scheme&, const GraphInstance& g, const SchemeParams& p,
                                    const FieldConfig& f, const ProofTranscript&, Rng& rng) {
            return prover(g, p, f, rng);
          }};
}

}  // namespace mutate

}  // namespace adsv
