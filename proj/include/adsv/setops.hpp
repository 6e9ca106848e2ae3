#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adsv/extension.hpp"
#include "adsv/field.hpp"
#include "adsv/meter.hpp"
#include "adsv/transcript.hpp"

namespace adsv {

// phi_a(r) = sum_j a_j r^j, maintained under turnstile updates.
class Fingerprint {
 public:
  explicit Fingerprint(const Fe& r) : r_(r), value_(r.config()->zero()) {}
  void update(std::uint64_t index, const Fe& delta) { value_ += delta * r_.pow(index); }
  const Fe& value() const { return value_; }
  const Fe& point() const { return r_; }

 private:
  Fe r_;
  Fe value_;
};

// sum_{i,d} B_d(i) beta1^i beta2^d for a family of balls.
class BallFingerprint {
 public:
  BallFingerprint(const Fe& beta1, const Fe& beta2) : b1_(beta1), b2_(beta2), value_(beta1.config()->zero()) {}
  void update(std::uint64_t i, std::uint64_t d, const Fe& delta) { value_ += delta * b1_.pow(i) * b2_.pow(d); }
  const Fe& value() const { return value_; }

 private:
  Fe b1_, b2_;
  Fe value_;
};

// Index of an edge in the universe [n^2]: (min-1)n+max when undirected, (u-1)n+v when directed.
std::uint64_t edge_index(std::uint32_t u, std::uint32_t v, std::uint32_t n, bool directed);

// Verifier half of the inner-product scheme behind subset and intersection checks.
// The universe [N] is shaped into [h] x [vdim]; the Verifier keeps S~(r,y) and T~(r,y) for y in
// [vdim] and the Prover sends P(X) = sum_y S~(X,y) T~(X,y), degree 2(h-1).
class SetSchemeVerifier {
 public:
  SetSchemeVerifier(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim, Rng& rng, SpaceMeter& m);

  void add_s(std::uint64_t index, const Fe& delta);
  void add_t(std::uint64_t index, const Fe& delta);
  // Checks the polynomial at r and returns its claimed value sum_i S_i T_i.
  Fe finish(const Block& poly) const;

  std::uint64_t h() const { return h_; }
  DegreeBounds bounds() const { return {static_cast<std::uint32_t>(2 * (h_ - 1))}; }

 private:
  void add(MeteredVec<Fe>& arr, std::uint64_t index, const Fe& delta);

  const FieldConfig* f_;
  std::uint64_t universe_;
  std::uint32_t vdim_;
  std::uint64_t h_;
  const LagrangeDomain* dom_;
  Cell<Fe> r_;
  MeteredVec<Fe> s_;
  MeteredVec<Fe> t_;
};

using WeightedElements = std::vector<std::pair<std::uint64_t, std::int64_t>>;

// Honest Prover polynomial for the inner product of S and T.
std::vector<Fe> set_scheme_poly(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                                const WeightedElements& s, const WeightedElements& t);
std::uint64_t set_scheme_h(std::uint64_t universe, std::uint32_t vdim);

struct SetSchemeRun {
  bool accepted = false;
  std::int64_t value = 0;  // |S cap T|, or 1/0 for subset
  std::string reason;
  std::uint64_t hcost = 0;
  std::uint64_t vcost = 0;
};

// Standalone runs over element streams of S and T (multisets of indices in [1,N]).
// `tamper` may rewrite the honest coefficient list before the Verifier reads it.
SetSchemeRun intersection_scheme(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                                 const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
                                 std::uint64_t seed, const std::function<void(std::vector<Fe>&, Rng&)>& tamper = {});
SetSchemeRun subset_scheme(const FieldConfig& f, std::uint64_t universe, std::uint32_t vdim,
                           const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
                           std::uint64_t seed, const std::function<void(std::vector<Fe>&, Rng&)>& tamper = {});

}  // namespace adsv
