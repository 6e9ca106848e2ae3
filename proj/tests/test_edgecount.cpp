#include <gtest/gtest.h>

#include "adsv/edgecount.hpp"
#include "adsv/generate.hpp"
#include "adsv/oracle.hpp"

using namespace adsv;

namespace {

GraphInstance vanilla(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphInstance g;
  g.header.n = n;
  g.header.model = StreamModel::vanilla;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::int64_t run(const Scheme& s, const GraphInstance& g, SchemeParams p, std::uint64_t seed = 1) {
  auto r = run_honest(s, g, p, seed);
  EXPECT_TRUE(r.outcome.accepted) << r.outcome.reject_reason;
  return r.outcome.output.value;
}

}  // namespace

TEST(EdgeCount, SpecExamples) {
  auto induced = make_edgecount_induced();
  auto cross = make_edgecount_cross();
  auto path = vanilla(3, {{1, 2}, {2, 3}});
  path.sets = {{1, 2}};
  EXPECT_EQ(run(*induced, path, {1, 3}), 1);
  auto k4 = vanilla(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  k4.sets = {{1, 2, 3}, {1, 2, 3}};
  EXPECT_EQ(run(*induced, k4, {2, 2}), 6);
  auto e = vanilla(2, {{1, 2}});
  e.set_pairs = {{{1}, {2}}};
  EXPECT_EQ(run(*cross, e, {1, 2}), 1);
  std::vector<std::pair<Vertex, Vertex>> k33;
  for (Vertex a = 1; a <= 3; ++a)
    for (Vertex b = 4; b <= 6; ++b) k33.emplace_back(a, b);
  auto g33 = vanilla(6, k33);
  g33.set_pairs = {{{1, 2, 3}, {4, 5, 6}}};
  EXPECT_EQ(run(*cross, g33, {3, 2}), 9);
}

TEST(EdgeCount, RandomInstancesMatchOracle) {
  auto induced = make_edgecount_induced();
  auto cross = make_edgecount_cross();
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen::turnstile_gnp(16, 0.3, 2, rng);
    int ell = static_cast<int>(rng.uniform(1, 8));
    for (int i = 0; i < ell; ++i) g.sets.push_back(gen::random_subset(16, 0.4, rng));
    SchemeParams p{static_cast<std::uint32_t>(1u << rng.uniform(0, 4)), 0};
    EXPECT_EQ(run(*induced, g, p, trial), induced->oracle_output(g).value);
    g.sets.clear();
    for (int i = 0; i < ell; ++i) {
      auto u = gen::random_subset(16, 0.5, rng);
      std::vector<Vertex> a, b;
      for (auto v : u) (rng.coin(0.5) ? a : b).push_back(v);
      g.set_pairs.emplace_back(a, b);
    }
    EXPECT_EQ(run(*cross, g, p, trial), cross->oracle_output(g).value);
  }
}

TEST(EdgeCount, CostsAndConfig) {
  auto induced = make_edgecount_induced();
  Rng rng(8);
  auto g = gen::gnp(16, 0.3, rng);
  g.sets = {gen::random_subset(16, 0.5, rng)};
  for (std::uint32_t t : {1u, 2u, 4u, 8u, 16u}) {
    auto r = run_honest(*induced, g, {t, 0}, 3);
    std::uint64_t s = 16 / t;
    EXPECT_EQ(r.transcript.element_count(), (2 * t - 1) * (2 * t - 1));
    EXPECT_LE(r.outcome.vcost_elements, s * s + 4 * s + 3);
  }
  EXPECT_THROW(induced->check_instance(g, {3, 3}), ConfigError);
  auto bad = vanilla(3, {{1, 2}});
  bad.set_pairs = {{{1}, {1, 2}}};
  EXPECT_THROW(make_edgecount_cross()->check_instance(bad, {1, 3}), ConfigError);
}

TEST(EdgeCount, IncrementalExtendMatchesFreshSketch) {
  FieldConfig f = FieldConfig::auto_for(12);
  ShapeConfig shape(12, 3, 4);
  SpaceMeter m;
  Rng rng(9);
  EdgeTable table(f, shape, false, rng, m);
  SetSketch grow(table, m);
  for (Vertex v = 1; v <= 12; ++v) {
    grow.extend(v);
    SetSketch fresh(table, m);
    for (Vertex u = 1; u <= v; ++u) fresh.extend(u);
    for (std::uint32_t y = 1; y <= 4; ++y) {
      EXPECT_EQ(grow.at_r1(y), fresh.at_r1(y));
      EXPECT_EQ(grow.at_r2(y), fresh.at_r2(y));
    }
  }
}

TEST(EdgeCount, AccumulatorIsAdditiveOverSets) {
  FieldConfig f = FieldConfig::auto_for(10);
  ShapeConfig shape(10, 2, 5);
  Rng rng(10);
  auto g = gen::gnp(10, 0.5, rng);
  std::vector<std::vector<Vertex>> sets{{1, 2, 3, 4}, {5, 6, 7}, {2, 8, 9, 10}};
  auto accumulate = [&](const std::vector<std::vector<Vertex>>& fam) {
    SpaceMeter m;
    Rng r(99);
    EdgeTable table(f, shape, false, r, m);
    for (const auto& t : g.tokens) table.update(t.u, t.v, f(t.value));
    EdgeCounter c(table, false, m);
    for (const auto& s : fam) {
      for (auto v : s) c.add_vertex(v);
      c.end_set();
    }
    return c.accumulator();
  };
  Fe sum = f.zero();
  for (const auto& s : sets) sum += accumulate({s});
  EXPECT_EQ(accumulate(sets), sum);
}

TEST(EdgeCount, MutationsAreCaught) {
  auto induced = make_edgecount_induced();
  Rng rng(11);
  auto g = gen::gnp(12, 0.4, rng);
  g.sets = {gen::random_subset(12, 0.5, rng), gen::random_subset(12, 0.5, rng)};
  for (const auto& m : induced->mutations()) {
    auto st = run_adversarial(*induced, g, {3, 4}, m, 100, 5);
    EXPECT_EQ(st.accepts_wrong, 0u) << m.name;
  }
}
