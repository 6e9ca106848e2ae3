#include <gtest/gtest.h>

#include "adsv/generate.hpp"
#include "adsv/graphapps.hpp"
#include "adsv/oracle.hpp"

using namespace adsv;

namespace {

GraphInstance graph(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, bool directed = false) {
  GraphInstance g;
  g.header.n = n;
  g.header.model = StreamModel::vanilla;
  g.header.directed = directed;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

GraphInstance cycle(std::uint32_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= n; ++v) e.emplace_back(v, v % n + 1);
  return graph(n, e);
}

Accepted run(const Scheme& s, const GraphInstance& g, SchemeParams p = {}, std::uint64_t seed = 1) {
  auto r = run_honest(s, g, p, seed);
  EXPECT_TRUE(r.outcome.accepted) << s.name() << ": " << r.outcome.reject_reason;
  EXPECT_LE(r.transcript.element_count(), r.bounds.hcost) << s.name();
  return r.outcome.output;
}

TrialStats attack(const Scheme& s, const GraphInstance& g, const std::string& policy, std::uint64_t trials = 100,
                  SchemeParams p = {}) {
  for (const auto& m : s.mutations())
    if (m.name == policy) return run_adversarial(s, g, p, m, trials, 3);
  ADD_FAILURE() << "no policy " << policy;
  return {};
}

int odd_parts(const std::vector<std::vector<Vertex>>& comps) {
  int odd = 0;
  for (const auto& c : comps) odd += c.size() % 2;
  return odd;
}

}  // namespace

TEST(TutteBerge, CertificateBalancesOnSmallGraphs) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::uint32_t>(rng.uniform(1, 10));
    auto dg = oracle::DenseGraph::from_instance(gen::gnp(n, rng.coin(0.5) ? 0.2 : 0.5, rng));
    auto c = tutte_berge_certificate(dg);
    const int k = static_cast<int>(c.matching.size());
    EXPECT_EQ(k, oracle::matching(dg));
    EXPECT_EQ(k, oracle::tutte_berge_bound(dg));
    EXPECT_EQ(2 * k, static_cast<int>(c.ustar.size() + n) - odd_parts(c.components));
    std::vector<bool> removed(n + 1, false);
    for (auto v : c.ustar) removed[v] = true;
    EXPECT_EQ(odd_parts(c.components), oracle::odd_components(dg, removed));
  }
}

TEST(MaxMatch, Examples) {
  auto fr = make_maxmatch_frugal();
  auto la = make_maxmatch_laconic();
  auto k4 = graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto star = graph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
  for (const Scheme* s : {fr.get(), la.get()}) {
    EXPECT_EQ(run(*s, cycle(5)).value, 2);
    EXPECT_EQ(run(*s, k4, {2, 2}).value, 2);
    EXPECT_EQ(run(*s, star).value, 1);
    EXPECT_EQ(run(*s, graph(3, {})).value, 0);
  }
  auto c = tutte_berge_certificate(oracle::DenseGraph::from_instance(star));
  EXPECT_EQ(c.ustar, std::vector<Vertex>{1});
  auto c5 = tutte_berge_certificate(oracle::DenseGraph::from_instance(cycle(5)));
  EXPECT_TRUE(c5.ustar.empty());
}

TEST(MaxMatch, RandomGraphsMatchOracle) {
  auto fr = make_maxmatch_frugal();
  auto la = make_maxmatch_laconic();
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(rng.uniform(4, 16));
    auto g = gen::gnp(n, rng.coin(0.5) ? 0.15 : 0.35, rng);
    const auto truth = oracle::matching(oracle::DenseGraph::from_instance(g));
    SchemeParams p{static_cast<std::uint32_t>(rng.uniform(1, n)), 0};
    EXPECT_EQ(run(*fr, g, p, trial).value, truth) << "trial " << trial;
    if (trial % 4 == 0) EXPECT_EQ(run(*la, g, p, trial).value, truth) << "trial " << trial;
  }
}

TEST(MaxMatch, LyingCertificatesAreRejected) {
  auto fr = make_maxmatch_frugal();
  auto la = make_maxmatch_laconic();
  Rng rng(33);
  auto g = gen::gnp(12, 0.3, rng);
  for (const Scheme* s : {fr.get(), la.get()})
    for (const auto& m : s->mutations()) {
      auto st = run_adversarial(*s, g, {3, 0}, m, 100, 4);
      EXPECT_EQ(st.accepts_wrong, 0u) << s->name() << " " << m.name;
    }
  // The split lie really understates the matching here.
  auto st = attack(*fr, cycle(6), "split-component");
  EXPECT_EQ(st.rejects, st.trials);
  st = attack(*la, cycle(6), "split-forest");
  EXPECT_EQ(st.rejects, st.trials);
}

TEST(Mis, Examples) {
  auto s = make_mis();
  auto c4 = cycle(4);
  auto out = run(*s, c4);
  EXPECT_EQ(out.value, 2);
  EXPECT_EQ(out.labels, (std::vector<std::int64_t>{0, 1, 0, 1, 0}));
  EXPECT_TRUE(s->matches_oracle(c4, out));
  // {1,2} on the edge {1,2}
  auto st = attack(*s, graph(2, {{1, 2}}), "add-neighbor");
  EXPECT_EQ(st.rejects, st.trials);
  // {1} alone on the path 1-2-3-4
  st = attack(*s, graph(4, {{1, 2}, {2, 3}, {3, 4}}), "drop-member");
  EXPECT_EQ(st.rejects, st.trials);
}

TEST(Mis, RandomGraphs) {
  auto s = make_mis();
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::gnp(static_cast<std::uint32_t>(rng.uniform(2, 16)), 0.3, rng);
    EXPECT_TRUE(s->matches_oracle(g, run(*s, g, {2, 0}, trial)));
  }
  auto g = gen::gnp(12, 0.3, rng);
  for (const auto& m : s->mutations()) EXPECT_EQ(run_adversarial(*s, g, {}, m, 100, 5).accepts_wrong, 0u) << m.name;
}

TEST(Toposort, Examples) {
  auto s = make_toposort();
  auto dag = graph(3, {{1, 2}, {2, 3}}, true);
  auto out = run(*s, dag);
  EXPECT_EQ(out.labels, (std::vector<std::int64_t>{0, 1, 2, 3}));
  auto st = attack(*s, dag, "backward-arc");
  EXPECT_EQ(st.rejects, st.trials);
  EXPECT_THROW(s->check_instance(graph(3, {{1, 2}, {2, 3}, {3, 1}}, true), {}), ConfigError);
  EXPECT_THROW(s->check_instance(graph(3, {{1, 2}}), {}), ConfigError);
}

TEST(Toposort, RandomDags) {
  auto s = make_toposort();
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::random_dag(16, 0.25, rng);
    auto out = run(*s, g, {static_cast<std::uint32_t>(rng.uniform(1, 16)), 0}, trial);
    std::vector<Vertex> order(out.labels.begin() + 1, out.labels.end());
    EXPECT_TRUE(oracle::is_topological_order(oracle::DenseGraph::from_instance(g), order));
  }
  auto g = gen::random_dag(12, 0.3, rng);
  for (const auto& m : s->mutations()) EXPECT_EQ(run_adversarial(*s, g, {}, m, 100, 6).accepts_wrong, 0u) << m.name;
}

TEST(Acyclicity, Examples) {
  auto s = make_acyclicity();
  auto tri = graph(3, {{1, 2}, {2, 3}, {3, 1}}, true);
  auto r = run_honest(*s, tri, {}, 1);
  ASSERT_TRUE(r.outcome.accepted);
  EXPECT_EQ(r.outcome.output.value, 0);
  EXPECT_EQ(r.transcript.blocks()[1].items.size(), 3u);
  auto dag = graph(4, {{1, 2}, {2, 3}, {1, 4}}, true);
  EXPECT_EQ(run(*s, dag).value, 1);
  auto st = attack(*s, dag, "fake-cycle", 500);
  EXPECT_LE(st.accepts_wrong, 5u);
  st = attack(*s, tri, "fake-order");
  EXPECT_EQ(st.rejects, st.trials);
}

TEST(Acyclicity, RandomDigraphs) {
  auto s = make_acyclicity();
  Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = trial % 2 ? gen::random_dag(12, 0.3, rng) : gen::random_digraph(12, 0.08, rng);
    EXPECT_EQ(run(*s, g, {3, 0}, trial).value, s->oracle_output(g).value);
  }
}

TEST(Components, Examples) {
  auto s = make_components();
  EXPECT_EQ(run(*s, graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})).value, 2);
  EXPECT_EQ(run(*s, graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})).value, 1);
  EXPECT_EQ(run(*s, graph(4, {})).value, 4);
  auto st = attack(*s, graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}), "split-component");
  EXPECT_EQ(st.rejects, st.trials);
}

TEST(Components, RandomGraphs) {
  auto s = make_components();
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::gnp(16, 0.12, rng);
    EXPECT_EQ(run(*s, g, {static_cast<std::uint32_t>(rng.uniform(1, 16)), 0}, trial).value,
              oracle::components(oracle::DenseGraph::from_instance(g)));
  }
  auto g = gen::gnp(12, 0.2, rng);
  for (const auto& m : s->mutations()) EXPECT_EQ(run_adversarial(*s, g, {}, m, 100, 7).accepts_wrong, 0u) << m.name;
}

TEST(FrugalComposites, SpaceStaysLinearInS) {
  Rng rng(38);
  auto g = gen::gnp(16, 0.3, rng);
  auto d = gen::random_dag(16, 0.3, rng);
  for (std::uint32_t t : {1u, 2u, 4u, 8u, 16u}) {
    const std::uint64_t s = 16 / t;
    for (auto* make : {&make_maxmatch_frugal, &make_mis, &make_components}) {
      auto sc = (*make)();
      auto r = run_honest(*sc, g, {t, 0}, 2);
      EXPECT_LE(r.outcome.vcost_elements, 6 * s + 20) << sc->name() << " t=" << t;
    }
    auto r = run_honest(*make_toposort(), d, {t, 0}, 2);
    EXPECT_LE(r.outcome.vcost_elements, 6 * s + 20) << "toposort t=" << t;
  }
}
