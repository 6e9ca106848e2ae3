#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

#include "adsv/extension.hpp"

using namespace adsv;

namespace {

// Term-by-term product formula for delta_u(x) over {1..size}.
Fe naive_impulse(const FieldConfig& f, std::int64_t u, const Fe& x, std::int64_t size) {
  Fe r = f.one();
  for (std::int64_t k = 1; k <= size; ++k) {
    if (k == u) continue;
    r = r * (x - f(k)) * (f(u) - f(k)).inv();
  }
  return r;
}

}  // namespace

TEST(UnitImpulse, InterpolationIdentities) {
  FieldConfig f(101);
  for (std::uint64_t s : {1, 2, 5, 9}) {
    for (std::int64_t u = 1; u <= static_cast<std::int64_t>(s); ++u)
      for (std::int64_t x = 1; x <= static_cast<std::int64_t>(s); ++x)
        EXPECT_EQ(unit_impulse(u, f(x), s), x == u ? f.one() : f.zero());
  }
  EXPECT_EQ(unit_impulse(2, f(7), 4), naive_impulse(f, 2, f(7), 4));
  EXPECT_THROW(unit_impulse(0, f(1), 4), std::out_of_range);
  EXPECT_THROW(unit_impulse(5, f(1), 4), std::out_of_range);
}

TEST(UnitImpulse, RowMatchesPointwise) {
  FieldConfig f(1000003);
  Rng rng(1);
  const auto& dom = LagrangeDomain::get(f, 11);
  for (int i = 0; i < 20; ++i) {
    Fe x = rng.fe_random(f);
    auto row = dom.impulse_row(x);
    Fe total = f.zero();
    for (std::int64_t u = 1; u <= 11; ++u) {
      EXPECT_EQ(row[u - 1], naive_impulse(f, u, x, 11));
      total += row[u - 1];
    }
    EXPECT_EQ(total, f.one());  // partition of unity
  }
}

TEST(PointSketch, EmptyAndImpulse) {
  FieldConfig f(101);
  PointSketch empty({4, 5}, {f(9), f(13)});
  EXPECT_EQ(empty.value(), f.zero());
  PointSketch at({4, 5}, {f(3), f(2)});
  at.update({3, 2}, f.one());
  EXPECT_EQ(at.value(), f.one());
  EXPECT_THROW(at.update({5, 1}, f.one()), std::out_of_range);
}

TEST(PointSketch, MatchesDenseInterpolation) {
  FieldConfig f(1000003);
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Fe> point{rng.fe_random(f), rng.fe_random(f)};
    PointSketch sk({4, 5}, point);
    std::vector<std::vector<Fe>> arr(5, std::vector<Fe>(6, f.zero()));
    for (int j = 0; j < 50; ++j) {
      std::int64_t a = rng.uniform(1, 4), b = rng.uniform(1, 5);
      Fe d = f(rng.uniform(-3, 3));
      sk.update({a, b}, d);
      arr[a][b] += d;
    }
    Fe full = f.zero();
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 5; ++b)
        full += arr[a][b] * naive_impulse(f, a, point[0], 4) * naive_impulse(f, b, point[1], 5);
    EXPECT_EQ(sk.value(), full);
  }
}

TEST(PointSketch, Linearity) {
  FieldConfig f(1000003);
  Rng rng(3);
  std::vector<Fe> pt{rng.fe_random(f), rng.fe_random(f), rng.fe_random(f)};
  PointSketch a({3, 3, 3}, pt), b({3, 3, 3}, pt), both({3, 3, 3}, pt);
  for (int j = 0; j < 30; ++j) {
    std::vector<std::int64_t> c{rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 3)};
    Fe d = f(rng.uniform(-5, 5));
    (j % 2 ? a : b).update(c, d);
    both.update(c, d);
  }
  EXPECT_EQ(a.value() + b.value(), both.value());
}

TEST(SchwartzZippel, RootFractionWithinBound) {
  FieldConfig f(101);
  Rng rng(4);
  int roots = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    std::vector<Fe> c;
    for (int k = 0; k <= 10; ++k) c.push_back(rng.fe_random(f));
    if (c[10].is_zero()) c[10] = f.one();
    Fe x = rng.fe_random(f), v = f.zero();
    for (int k = 10; k >= 0; --k) v = v * x + c[k];
    roots += v.is_zero();
  }
  const double bound = 10.0 / 101, sigma = std::sqrt(bound * (1 - bound) / trials);
  EXPECT_LE(static_cast<double>(roots) / trials, bound + 3 * sigma);
}

TEST(Shape, RowMajorAndBijection) {
  ShapeConfig c6(6, 2, 3);
  EXPECT_EQ(shape_vertex(1, c6), std::make_pair(1u, 1u));
  EXPECT_EQ(shape_vertex(4, c6), std::make_pair(2u, 1u));
  for (auto [n, t, s] : std::vector<std::array<std::uint32_t, 3>>{{97, 97, 1}, {97, 1, 97}, {10, 3, 4}, {64, 8, 8}}) {
    ShapeConfig c(n, t, s);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (Vertex v = 1; v <= n; ++v) {
      auto xy = shape_vertex(v, c);
      EXPECT_EQ(unshape_vertex(xy.first, xy.second, c), v);
      seen.insert(xy);
    }
    EXPECT_EQ(seen.size(), n);
  }
  EXPECT_THROW(ShapeConfig(10, 3, 3), std::invalid_argument);
  EXPECT_THROW(shape_vertex(0, c6), std::out_of_range);
}

TEST(Monomials, GradedOrder) {
  MonomialEnumerator en({1, 2});
  std::vector<std::vector<std::uint32_t>> seen;
  do seen.push_back(en.exponents());
  while (en.next());
  std::vector<std::vector<std::uint32_t>> expect{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {1, 2}};
  EXPECT_EQ(seen, expect);
  EXPECT_EQ(block_size({1, 2}), 6u);
}

TEST(CoeffsEval, Basics) {
  FieldConfig f(101);
  EXPECT_EQ(coeffs_eval({0}, {f(17)}, {f(55)}), f(17));
  EXPECT_EQ(coeffs_eval({2}, {f(0), f(0), f(1)}, {f(3)}), f(9));
  EXPECT_THROW(coeffs_eval({2}, {f(1)}, {f(3)}), BlockShapeError);
}

TEST(CoeffsEval, MatchesNaiveMonomialSum) {
  FieldConfig f(1000003);
  Rng rng(6);
  DegreeBounds b{3, 3};
  std::vector<Fe> graded;
  for (std::uint64_t i = 0; i < block_size(b); ++i) graded.push_back(rng.fe_random(f));
  std::vector<Fe> pt{rng.fe_random(f), rng.fe_random(f)};
  MonomialEnumerator en(b);
  Fe naive = f.zero();
  std::size_t i = 0;
  do naive += graded[i++] * pt[0].pow(en.exponents()[0]) * pt[1].pow(en.exponents()[1]);
  while (en.next());
  EXPECT_EQ(coeffs_eval(b, graded, pt), naive);
}

TEST(StreamingPolyEval, ValueAndGridSum) {
  FieldConfig f(1000003);
  Rng rng(7);
  DegreeBounds b{4, 2, 3};
  std::vector<Fe> graded;
  for (std::uint64_t i = 0; i < block_size(b); ++i) graded.push_back(rng.fe_random(f));
  std::vector<Fe> pt{rng.fe_random(f), rng.fe_random(f), rng.fe_random(f)};
  std::vector<const LagrangeDomain*> doms{&LagrangeDomain::get(f, 3), &LagrangeDomain::get(f, 2),
                                          &LagrangeDomain::get(f, 5)};
  StreamingPolyEval ev(b, pt, doms);
  for (const auto& c : graded) ev.push(c);
  EXPECT_TRUE(ev.complete());
  EXPECT_EQ(ev.value(), coeffs_eval(b, graded, pt));
  Fe sum = f.zero();
  for (int a = 1; a <= 3; ++a)
    for (int c = 1; c <= 2; ++c)
      for (int d = 1; d <= 5; ++d) sum += coeffs_eval(b, graded, {f(a), f(c), f(d)});
  EXPECT_EQ(ev.grid_sum(), sum);
}

TEST(Interpolation, RoundTrip) {
  FieldConfig f(1000003);
  Rng rng(8);
  DegreeBounds b{3, 2};
  std::vector<Fe> graded;
  for (std::uint64_t i = 0; i < block_size(b); ++i) graded.push_back(rng.fe_random(f));
  std::vector<Fe> evals;
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 3; ++y) evals.push_back(coeffs_eval(b, graded, {f(x), f(y)}));
  EXPECT_EQ(graded_from_evaluations(f, b, evals), graded);
  EXPECT_EQ(dense_to_graded(b, graded_to_dense(b, graded)), graded);
}
