#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adsv {

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);
std::uint64_t next_prime_above(std::uint64_t n);

class FieldElement;

// Prime field F_p, p < 2^62. Immutable once built; elements keep a pointer to it.
class FieldConfig {
 public:
  enum class Origin { auto_from_n, explicit_modulus };

  explicit FieldConfig(std::uint64_t p, Origin origin = Origin::explicit_modulus);

  // Smallest prime above max(n^3, dwn2, 2^20). dwn2 is D*W*n^2 for weighted SSSP.
  // ADSV_MODULUS in the environment overrides the rule.
  static FieldConfig auto_for(std::uint64_t n, std::uint64_t dwn2 = 0);

  std::uint64_t modulus() const { return p_; }
  Origin origin() const { return origin_; }
  unsigned bits() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement operator()(std::int64_t v) const;  // canonical reduction of a signed integer
  FieldElement from_u64(std::uint64_t v) const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
#if defined(__SIZEOF_INT128__)
    if (small_) return a * b % p_;
    auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * b * pinv_);
    auto r = static_cast<std::int64_t>(a * b - q * p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    if (static_cast<std::uint64_t>(r) >= p_) r -= static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
#else
#error "needs __int128 support"
#endif
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t c = a + b;
    return c >= p_ ? c - p_ : c;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  bool operator==(const FieldConfig& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  Origin origin_;
  long double pinv_;
  bool small_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint64_t v, const FieldConfig* f) : v_(v), f_(f) {}

  std::uint64_t value() const { return v_; }
  const FieldConfig* config() const { return f_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {f(o).add(v_, o.v_), f_}; }
  FieldElement operator-(const FieldElement& o) const { return {f(o).sub(v_, o.v_), f_}; }
  FieldElement operator*(const FieldElement& o) const { return {f(o).mul(v_, o.v_), f_}; }
  FieldElement operator-() const { return {v_ == 0 ? 0 : f_->modulus() - v_, f_}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  bool operator==(const FieldElement& o) const { return v_ == o.v_ && same(o); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const { return {f_->pow(v_, e), f_}; }

 private:
  const FieldConfig& f(const FieldElement& o) const {
    if (!same(o)) throw FieldMismatch("field elements from different fields");
    return *f_;
  }
  bool same(const FieldElement& o) const {
    if (f_ == o.f_) return f_ != nullptr;
    return f_ && o.f_ && f_->modulus() == o.f_->modulus();
  }

  std::uint64_t v_ = 0;
  const FieldConfig* f_ = nullptr;
};

using Fe = FieldElement;

inline FieldElement fe_add(const Fe& a, const Fe& b) { return a + b; }
inline FieldElement fe_sub(const Fe& a, const Fe& b) { return a - b; }
inline FieldElement fe_mul(const Fe& a, const Fe& b) { return a * b; }
inline FieldElement fe_inv(const Fe& a) { return a.inv(); }

// Seeded generator. Children derived with sub() draw from independent streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(seed) {}

  Rng sub(std::string_view tag) const;
  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), rejection sampled
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  Fe fe_random(const FieldConfig& f) { return f.from_u64(below(f.modulus())); }
  Fe fe_random_nonzero(const FieldConfig& f) { return f.from_u64(1 + below(f.modulus() - 1)); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace adsv
