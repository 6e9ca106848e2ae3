#include "adsv/field.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace adsv {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod128(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are deterministic for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

FieldConfig::FieldConfig(std::uint64_t p, Origin origin) : p_(p), origin_(origin) {
  if (p >= kMaxModulus) throw std::invalid_argument("modulus must be below 2^62");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  static_assert(std::numeric_limits<long double>::digits >= 64, "needs 80-bit long double");
  pinv_ = 1.0L / static_cast<long double>(p);
  small_ = p < (std::uint64_t{1} << 32);
}

FieldConfig FieldConfig::auto_for(std::uint64_t n, std::uint64_t dwn2) {
  if (const char* env = std::getenv("ADSV_MODULUS"); env && *env) {
    return FieldConfig(std::strtoull(env, nullptr, 10), Origin::explicit_modulus);
  }
  std::uint64_t floor = std::max<std::uint64_t>({n * n * n, dwn2, std::uint64_t{1} << 20});
  return FieldConfig(next_prime_above(floor), Origin::auto_from_n);
}

unsigned FieldConfig::bits() const { return static_cast<unsigned>(std::bit_width(p_ - 1)); }

FieldElement FieldConfig::zero() const { return {0, this}; }
FieldElement FieldConfig::one() const { return {1, this}; }

FieldElement FieldConfig::operator()(std::int64_t v) const {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r), this};
}

FieldElement FieldConfig::from_u64(std::uint64_t v) const { return {v % p_, this}; }

std::uint64_t FieldConfig::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldConfig::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero");
  return pow(a, p_ - 2);
}

FieldElement FieldElement::inv() const {
  if (!f_) throw FieldMismatch("unbound field element");
  return {f_->inv(v_), f_};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::sub(std::string_view tag) const {
  std::uint64_t h = splitmix64(seed_);
  for (unsigned char c : tag) h = splitmix64(h ^ c);
  return Rng(h);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace adsv
