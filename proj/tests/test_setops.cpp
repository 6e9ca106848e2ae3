#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "adsv/generate.hpp"
#include "adsv/setops.hpp"

using namespace adsv;

TEST(Fingerprint, OrderInsensitiveAndEmpty) {
  FieldConfig f(1000003);
  Rng rng(1);
  Fe r = rng.fe_random(f);
  Fingerprint a(r), b(r), empty(r);
  std::vector<std::uint64_t> items{5, 9, 9, 2, 77, 31};
  for (auto i : items) a.update(i, f.one());
  std::reverse(items.begin(), items.end());
  for (auto i : items) b.update(i, f.one());
  EXPECT_EQ(a.value(), b.value());
  EXPECT_EQ(empty.value(), f.zero());
  b.update(9, f(-1));
  b.update(9, f.one());
  EXPECT_EQ(a.value(), b.value());
}

TEST(Fingerprint, DifferingVectorsRarelyCollide) {
  FieldConfig f(1000003);
  Rng rng(2);
  int collisions = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Fe r = rng.fe_random(f);
    Fingerprint a(r), b(r);
    for (std::uint64_t j = 1; j <= 100; ++j) {
      std::int64_t v = rng.uniform(0, 5);
      a.update(j, f(v));
      b.update(j, f(v));
    }
    b.update(rng.uniform(1, 100), f.one());
    collisions += a.value() == b.value();
  }
  EXPECT_LE(collisions, 10);
}

TEST(BallFingerprint, OrderInsensitive) {
  FieldConfig f(1000003);
  Rng rng(3);
  Fe b1 = rng.fe_random(f), b2 = rng.fe_random(f);
  BallFingerprint x(b1, b2), y(b1, b2);
  x.update(3, 1, f.one());
  x.update(4, 2, f.one());
  y.update(4, 2, f.one());
  y.update(3, 1, f.one());
  EXPECT_EQ(x.value(), y.value());
  y.update(3, 2, f.one());
  EXPECT_NE(x.value(), y.value());
}

namespace {

std::vector<std::uint64_t> k3_edges() { return {edge_index(1, 2, 3, false), edge_index(2, 3, 3, false), edge_index(1, 3, 3, false)}; }

}  // namespace

TEST(SubsetScheme, SmallCases) {
  FieldConfig f = FieldConfig::auto_for(3);
  auto r = subset_scheme(f, 9, 3, {edge_index(2, 1, 3, false)}, k3_edges(), 1);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.value, 1);
  GraphInstance path;
  auto bad = subset_scheme(f, 9, 3, {edge_index(1, 2, 3, false)}, {edge_index(2, 3, 3, false)}, 1);
  EXPECT_TRUE(bad.accepted);
  EXPECT_EQ(bad.value, 0);
}

TEST(IntersectionScheme, SmallCases) {
  FieldConfig f = FieldConfig::auto_for(16);
  auto d = intersection_scheme(f, 256, 16, {1, 2, 3}, {4, 5, 6}, 2);
  EXPECT_TRUE(d.accepted);
  EXPECT_EQ(d.value, 0);
  auto same = intersection_scheme(f, 256, 16, {10, 20, 30, 40}, {40, 30, 20, 10}, 2);
  EXPECT_EQ(same.value, 4);
  // h = 16, so the polynomial has 2h - 1 coefficients; the Verifier keeps r plus two length-16 arrays.
  EXPECT_EQ(same.hcost, 31u);
  EXPECT_EQ(same.vcost, 1u + 2 * 16 + 1);
}

TEST(SetSchemes, RandomAgainstDirectComputation) {
  FieldConfig f = FieldConfig::auto_for(16);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t vdim = static_cast<std::uint32_t>(1u << rng.uniform(0, 8));
    std::vector<std::uint64_t> s, t;
    std::set<std::uint64_t> ss, ts;
    for (std::uint64_t i = 1; i <= 256; ++i) {
      if (rng.coin(0.2)) s.push_back(i), ss.insert(i);
      if (rng.coin(0.4)) t.push_back(i), ts.insert(i);
    }
    std::int64_t inter = 0;
    for (auto x : ss) inter += ts.count(x);
    auto r = intersection_scheme(f, 256, vdim, s, t, trial);
    ASSERT_TRUE(r.accepted);
    EXPECT_EQ(r.value, inter);
    auto sub = subset_scheme(f, 256, vdim, s, t, trial);
    EXPECT_EQ(sub.value, std::includes(ts.begin(), ts.end(), ss.begin(), ss.end()) ? 1 : 0);
    auto self = subset_scheme(f, 256, vdim, s, s, trial);
    EXPECT_EQ(self.value, 1);
  }
}

TEST(SetSchemes, TamperedPolynomialRejected) {
  FieldConfig f = FieldConfig::auto_for(16);
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto r = intersection_scheme(f, 256, 16, {1, 2, 3, 50}, {2, 3, 50, 99}, seed, [&](std::vector<Fe>& c, Rng& rng) {
      auto& x = c[rng.below(c.size())];
      x = x + rng.fe_random_nonzero(f);
    });
    accepted += r.accepted;
  }
  EXPECT_LE(accepted, 4);
}
