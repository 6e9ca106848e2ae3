#include <gtest/gtest.h>

#include <set>

#include "adsv/field.hpp"

using namespace adsv;

TEST(Field, SmallPrimeArithmetic) {
  FieldConfig f(7);
  EXPECT_EQ((f(3) + f(5)).value(), 1u);
  EXPECT_EQ((f(3) * f(5)).value(), 1u);
  EXPECT_EQ((f(0) * f(6)).value(), 0u);
  EXPECT_EQ(f(3).inv().value(), 5u);
  EXPECT_EQ(f(1).inv().value(), 1u);
  EXPECT_EQ((f(2) - f(5)).value(), 4u);
  EXPECT_EQ(f(-1).value(), 6u);
  FieldConfig g(101);
  EXPECT_EQ(g(2).inv().value(), 51u);
}

TEST(Field, Errors) {
  FieldConfig f(7), g(11);
  EXPECT_THROW(f(0).inv(), DivisionByZero);
  EXPECT_THROW(f(1) + g(1), FieldMismatch);
  EXPECT_THROW(FieldConfig(15), std::invalid_argument);
  EXPECT_THROW(FieldConfig((1ULL << 62) + 135), std::invalid_argument);
}

TEST(Field, Primality) {
  std::set<std::uint64_t> small;
  for (std::uint64_t p = 2; p < 200; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime &= p % d != 0;
    EXPECT_EQ(is_prime(p), prime) << p;
  }
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2,3,5,7
}

TEST(Field, AutoModulus) {
  auto f = FieldConfig::auto_for(64);
  EXPECT_GT(f.modulus(), 64ULL * 64 * 64);
  EXPECT_GT(f.modulus(), 1ULL << 20);
  EXPECT_TRUE(is_prime(f.modulus()));
  auto g = FieldConfig::auto_for(8, 1000000000);
  EXPECT_GT(g.modulus(), 1000000000ULL);
}

TEST(Field, AxiomsOnRandomTriples) {
  for (std::uint64_t p : {101ULL, 1000003ULL, 2305843009213693951ULL}) {
    FieldConfig f(p);
    Rng rng(p);
    for (int i = 0; i < 10000; ++i) {
      Fe a = rng.fe_random(f), b = rng.fe_random(f), c = rng.fe_random(f);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) ASSERT_EQ(a * a.inv(), f.one());
      ASSERT_EQ(a - a, f.zero());
    }
  }
}

TEST(Field, HornerMatchesNaive) {
  FieldConfig f(1000003);
  Rng rng(5);
  for (int d : {0, 1, 7, 100, 512}) {
    std::vector<Fe> c;
    for (int i = 0; i <= d; ++i) c.push_back(rng.fe_random(f));
    Fe x = rng.fe_random(f);
    Fe horner = f.zero();
    for (int i = d; i >= 0; --i) horner = horner * x + c[i];
    Fe naive = f.zero();
    for (int i = 0; i <= d; ++i) naive += c[i] * x.pow(i);
    EXPECT_EQ(horner, naive) << d;
  }
}

TEST(Rng, Reproducible) {
  FieldConfig f(1000003);
  Rng a(42), b(42);
  EXPECT_EQ(a.fe_random(f), b.fe_random(f));
  EXPECT_EQ(a.fe_random(f), b.fe_random(f));
  Rng c = Rng(42).sub("x"), d = Rng(42).sub("x"), e = Rng(42).sub("y");
  EXPECT_EQ(c.next(), d.next());
  EXPECT_NE(Rng(42).sub("x").next(), e.next());
}

TEST(Rng, DistinctSeedsGiveDistinctDraws) {
  FieldConfig f(1000003);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng r(s);
    firsts.insert(r.fe_random(f).value());
  }
  EXPECT_GE(firsts.size(), 99u);
}

TEST(Rng, ChiSquareUniform) {
  FieldConfig f(1000003);
  Rng rng(9);
  std::vector<int> bucket(16, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++bucket[rng.fe_random(f).value() * 16 / f.modulus()];
  double chi = 0, expect = draws / 16.0;
  for (int b : bucket) chi += (b - expect) * (b - expect) / expect;
  EXPECT_LT(chi, 37.70);  // chi-square critical value, 15 dof, alpha = 0.001
}
