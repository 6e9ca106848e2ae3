#include "adsv/setops.hpp"

#include "adsv/protocol.hpp"

namespace adsv {

std::uint64_t edge_index(std::uint32_t u, std::uint32_t v, std::uint32_t n, bool directed) {
  if (!directed && u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u - 1) * n + v;
}

std::uint64_t set_scheme_h(std::uint64_t universe, std::uint32_t vdim) {
  if (vdim == 0) throw std::invalid_argument("set scheme needs vdim >= 1");
  return (universe + vdim - 1) / vdim;
}

SetSchemeVerifier::SetSchemeVerifier(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim, Rng& rng,
                                     SpaceMeter& m)
    : f_(&f),
      universe_(universe),
      vdim_(vdim),
      h_(set_scheme_h(universe, vdim)),
      dom_(&LagrangeDomain::get(f, h_)),
      r_(m, rng.fe_random(f)),
      s_(m, vdim, f.zero()),
      t_(m, vdim, f.zero()) {}

void SetSchemeVerifier::add(MeteredVec<Fe>& arr, std::uint64_t index, const Fe& delta) {
  if (index < 1 || index > universe_) throw Rejection("set element outside the universe");
  const std::uint64_t x = (index - 1) / vdim_ + 1, y = (index - 1) % vdim_;
  arr[y] += delta * dom_->unit_impulse(static_cast<std::int64_t>(x), *r_);
}

void SetSchemeVerifier::add_s(std::uint64_t index, const Fe& delta) { add(s_, index, delta); }
void SetSchemeVerifier::add_t(std::uint64_t index, const Fe& delta) { add(t_, index, delta); }

Fe SetSchemeVerifier::finish(const Block& poly) const {
  PolyCheck pc = read_poly(poly, bounds(), {*r_}, {dom_}, *f_);
  Fe expect = f_->zero();
  for (std::uint32_t y = 0; y < vdim_; ++y) expect += s_[y] * t_[y];
  if (pc.value != expect) throw Rejection("set scheme sum-check failed ('" + poly.label + "')");
  return pc.grid_sum;
}

std::vector<Fe> set_scheme_poly(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                                const WeightedElements& s, const WeightedElements& t) {
  const std::uint64_t h = set_scheme_h(universe, vdim);
  const auto& dom = LagrangeDomain::get(f, h);
  const std::uint64_t npts = 2 * h - 1;
  std::vector<Fe> evals(npts, f.zero());
  std::vector<Fe> sx(vdim), tx(vdim);
  for (std::uint64_t x = 1; x <= npts; ++x) {
    auto row = dom.impulse_row(f.from_u64(x));
    std::fill(sx.begin(), sx.end(), f.zero());
    std::fill(tx.begin(), tx.end(), f.zero());
    for (auto [i, w] : s) sx[(i - 1) % vdim] += f(w) * row[(i - 1) / vdim];
    for (auto [i, w] : t) tx[(i - 1) % vdim] += f(w) * row[(i - 1) / vdim];
    Fe acc = f.zero();
    for (std::uint32_t y = 0; y < vdim; ++y) acc += sx[y] * tx[y];
    evals[x - 1] = acc;
  }
  return graded_from_evaluations(f, {static_cast<std::uint32_t>(2 * (h - 1))}, std::move(evals));
}

namespace {

SetSchemeRun run_set_scheme(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                            const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
                            std::uint64_t seed, const std::function<void(std::vector<Fe>&, Rng&)>& tamper,
                            bool subset) {
  WeightedElements ws, wt;
  for (auto i : s) ws.emplace_back(i, 1);
  for (auto i : t) wt.emplace_back(i, 1);
  auto coeffs = set_scheme_poly(f, universe, vdim, ws, wt);
  Rng adv = Rng(seed).sub("adversary");
  if (tamper) tamper(coeffs, adv);
  ProofTranscript proof(f.modulus());
  proof.add_coefficients("inner", {static_cast<std::uint32_t>(coeffs.size() - 1)}, coeffs);

  SetSchemeRun run;
  SpaceMeter meter;
  Rng rng = Rng(seed).sub("verifier");
  try {
    SetSchemeVerifier v(f, universe, vdim, rng, meter);
    Cell<Fe> count(meter, f.zero());
    for (auto i : t) v.add_t(i, f.one());
    for (auto i : s) {
      v.add_s(i, f.one());
      *count += f.one();
    }
    TranscriptReader reader(proof);
    Fe inner = v.finish(reader.expect(BlockKind::coefficients, "inner"));
    run.accepted = true;
    run.value = subset ? (inner == *count ? 1 : 0) : lift(inner);
  } catch (const Rejection& r) {
    run.reason = r.check();
  }
  run.hcost = proof.element_count();
  run.vcost = meter.peak();
  return run;
}

}  // namespace

SetSchemeRun intersection_scheme(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                                 const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
                                 std::uint64_t seed, const std::function<void(std::vector<Fe>&, Rng&)>& tamper) {
  return run_set_scheme(f, universe, vdim, s, t, seed, tamper, false);
}

SetSchemeRun subset_scheme(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                           const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
                           std::uint64_t seed, const std::function<void(std::vector<Fe>&, Rng&)>& tamper) {
  return run_set_scheme(f, universe, vdim, s, t, seed, tamper, true);
}

}  // namespace adsv
