// Acceptance run: one PASS/FAIL line per criterion, with the measured numbers behind it.
//
// Exit status is 0 when every criterion passes except those named with --known-fail, which are
// still run and reported as FAIL. A known failure that starts passing is reported and does not fail
// the run.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "adsv/extension.hpp"
#include "adsv/generate.hpp"
#include "adsv/graphapps.hpp"
#include "adsv/oracle.hpp"
#include "adsv/protocol.hpp"
#include "adsv/setops.hpp"
#include "adsv/sssp.hpp"

using namespace adsv;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;  // printed under the verdict line
  void fail(const std::string& why) {
    pass = false;
    notes.push_back("  fail: " + why);
  }
  void note(const std::string& s) { notes.push_back("  " + s); }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::uint64_t seed_of(const std::string& name, std::uint64_t i) {
  return std::hash<std::string>{}(name) ^ (i * 0x9e3779b97f4a7c15ULL);
}

const std::uint32_t kTGrid[] = {1, 2, 4, 8, 16, 32, 64};
constexpr std::uint32_t kN = 64;
constexpr std::uint64_t kSlack = 32;  // the O(1) words allowed on top of each space budget
constexpr std::uint64_t kC = 8;       // the C in the C*n and C*W*n budgets

// ---------------------------------------------------------------- 1: completeness

Verdict completeness() {
  Verdict v;
  const std::uint32_t sizes[] = {8, 12, 16};
  for (const auto& name : scheme_names()) {
    const Scheme& s = find_scheme(name);
    int bad = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng(seed_of(name, i));
      const std::uint32_t n = sizes[i % 3];
      GraphInstance g = gen::for_scheme(name, n, rng);
      const SchemeParams p{static_cast<std::uint32_t>(rng.uniform(1, n)), 0};
      try {
        RunResult r = run_honest(s, g, p, i);
        if (!r.outcome.accepted) {
          if (bad++ == 0) v.fail(name + " rejected instance " + std::to_string(i) + ": " + r.outcome.reject_reason);
        } else if (!s.matches_oracle(g, r.outcome.output)) {
          if (bad++ == 0) v.fail(name + " disagrees with the oracle on instance " + std::to_string(i));
        }
      } catch (const std::exception& e) {
        if (bad++ == 0) v.fail(name + " threw on instance " + std::to_string(i) + ": " + e.what());
      }
    }
    if (bad) v.note(name + ": " + std::to_string(bad) + "/200 bad");
  }
  v.note(std::to_string(scheme_names().size()) + " schemes x 200 instances, n in {8,12,16}");
  return v;
}

// ---------------------------------------------------------------- 2: soundness

// A random n=12 instance on which every mutation policy has something to mutate (for example a
// shortest-path instance with at least one round).
GraphInstance applicable_instance(const Scheme& s, const SchemeParams& p, std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    GraphInstance g = gen::for_scheme(s.name(), 12, rng);
    const FieldConfig f = s.field_for(g);
    const ProofTranscript honest = s.prove(g, p, f);
    bool ok = true;
    for (const auto& m : s.mutations()) {
      try {
        Rng probe(1);
        m.apply(s, g, p, f, honest, probe);
      } catch (const std::logic_error&) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

Verdict soundness() {
  Verdict v;
  double worst = 0;
  std::string worst_at;
  std::size_t policies = 0;
  for (const auto& name : scheme_names()) {
    const Scheme& s = find_scheme(name);
    const SchemeParams p{3, 0};
    GraphInstance g = applicable_instance(s, p, seed_of(name, 1000));
    const FieldConfig f = s.field_for(g);
    const std::uint64_t n3 = 12ULL * 12 * 12;
    if (f.modulus() <= n3) v.fail(name + ": modulus " + std::to_string(f.modulus()) + " is not above n^3");
    for (const auto& m : s.mutations()) {
      ++policies;
      TrialStats st = run_adversarial(s, g, p, m, 500, seed_of(name + m.name, 2));
      const double rate = st.accept_wrong_rate();
      if (rate >= worst) {
        worst = rate;
        worst_at = name + "/" + m.name;
      }
      if (rate > 0.02) {
        Interval ci = wilson_interval(st.accepts_wrong, st.trials);
        v.fail(name + "/" + m.name + fmt(" accepts_wrong %.4f (95%% CI %.4f..%.4f)", rate, ci.lo, ci.hi));
      }
    }
  }
  v.note(std::to_string(policies) + " scheme/policy pairs x 500 trials at n=12; worst " + worst_at +
         fmt(" at %.4f", worst));
  return v;
}

// ---------------------------------------------------------------- 3 and 4: costs on the t grid

struct GridRun {
  std::string scheme;
  GraphInstance g;
};

GraphInstance reachable_gnp(std::uint32_t n, double p, Rng& rng) {
  GraphInstance g = gen::gnp(n, p, rng);
  auto a = final_matrix(g);
  for (Vertex v = 1; v < n; ++v)
    if (!a[v][v + 1] && rng.coin(0.5)) g.add_edge(v, v + 1);
  g.header.source = 1;
  return g;
}

std::vector<GridRun> grid_instances() {
  Rng rng(64);
  std::vector<GridRun> out;
  out.push_back({"tri-laconic", gen::turnstile_gnp(kN, 0.2, 2, rng)});
  out.push_back({"tri-frugal", gen::turnstile_gnp(kN, 0.2, 2, rng)});
  GraphInstance ec = gen::turnstile_gnp(kN, 0.3, 2, rng);
  gen::add_random_sets(ec, 4, false, rng);
  out.push_back({"edgecount-induced", ec});
  GraphInstance ex = gen::turnstile_gnp(kN, 0.3, 2, rng);
  gen::add_random_sets(ex, 4, true, rng);
  out.push_back({"edgecount-cross", ex});
  out.push_back({"sssp-unweighted", reachable_gnp(kN, 0.03, rng)});
  out.push_back({"sssp-wturnstile", gen::weighted_gnp(kN, 0.08, 4, rng, StreamModel::turnstile)});
  out.push_back({"sssp-wvanilla", gen::weighted_gnp(kN, 0.08, 4, rng, StreamModel::weighted)});
  return out;
}

struct GridPoint {
  std::string scheme;
  std::uint32_t t, s;
  std::uint64_t h, v, labels, D, W;
};

std::vector<GridPoint> run_grid(Verdict& v) {
  std::vector<GridPoint> pts;
  for (auto& [name, g] : grid_instances()) {
    const Scheme& s = find_scheme(name);
    for (std::uint32_t t : kTGrid) {
      const SchemeParams p{t, 0};
      try {
        RunResult r = run_honest(s, g, p, t);
        if (!r.outcome.accepted) {
          v.fail(name + " t=" + std::to_string(t) + " rejected: " + r.outcome.reject_reason);
          continue;
        }
        GridPoint gp{name, t, resolve_params(p, kN).s, r.transcript.element_count(), r.outcome.vcost_elements, 0, 0,
                     static_cast<std::uint64_t>(g.header.W)};
        if (name == "sssp-unweighted") {
          gp.labels = r.transcript.blocks()[0].items.size();
          gp.D = static_cast<std::uint64_t>(r.outcome.output.value);
        }
        pts.push_back(gp);
      } catch (const std::exception& e) {
        v.fail(name + " t=" + std::to_string(t) + " threw: " + e.what());
      }
    }
  }
  return pts;
}

Verdict transcript_sizes(const std::vector<GridPoint>& pts, Verdict v) {
  std::map<std::string, std::size_t> checked;
  for (const auto& p : pts) {
    const std::uint64_t d = 2ULL * p.t - 1;
    std::uint64_t bound = 0;
    bool exact = false;
    if (p.scheme == "tri-laconic") {
      bound = d;
      exact = true;
    } else if (p.scheme == "tri-frugal") {
      bound = d * d * (2ULL * kN - 1);
    } else if (p.scheme.rfind("edgecount", 0) == 0) {
      bound = d * d;
    } else if (p.scheme == "sssp-unweighted") {
      bound = p.labels + p.D * (kN * d + kN + 2);
    } else {
      continue;
    }
    ++checked[p.scheme];
    if (exact ? p.h != bound : p.h > bound)
      v.fail(p.scheme + " t=" + std::to_string(p.t) + ": hcost " + std::to_string(p.h) + (exact ? " != " : " > ") +
             std::to_string(bound));
  }
  for (const auto& [name, k] : checked) v.note(name + ": " + std::to_string(k) + " grid points");
  return v;
}

Verdict space_budgets(const std::vector<GridPoint>& pts, Verdict v) {
  std::map<std::string, std::uint64_t> worst_margin;
  for (const auto& p : pts) {
    const std::uint64_t s = p.s;
    std::uint64_t bound = 0;
    if (p.scheme == "tri-laconic") bound = kN * s + kSlack;
    else if (p.scheme == "tri-frugal") bound = 2 * s + kSlack;
    else if (p.scheme.rfind("edgecount", 0) == 0) bound = s * s + 4 * s + kSlack;
    else if (p.scheme == "sssp-unweighted") bound = 2 * s + kSlack;
    else if (p.scheme == "sssp-wturnstile") bound = kC * kN;
    else if (p.scheme == "sssp-wvanilla") bound = kC * p.W * kN;
    if (p.v > bound)
      v.fail(p.scheme + " t=" + std::to_string(p.t) + ": peak " + std::to_string(p.v) + " words > " +
             std::to_string(bound));
    auto& m = worst_margin[p.scheme];
    m = std::max(m, p.v);
  }
  for (const auto& [name, peak] : worst_margin) v.note(name + ": largest peak " + std::to_string(peak) + " words");
  v.note("O(1) slack " + std::to_string(kSlack) + " words, C = " + std::to_string(kC));
  return v;
}

// ---------------------------------------------------------------- 5: tradeoff curve

Verdict tradeoff(const std::string& csv_path) {
  Verdict v;
  Rng rng(65);
  std::vector<std::pair<std::string, GraphInstance>> cases;
  GraphInstance ec = gen::gnp(kN, 0.3, rng);
  gen::add_random_sets(ec, 4, false, rng);
  cases.emplace_back("edgecount-induced", ec);
  GraphInstance ex = gen::gnp(kN, 0.3, rng);
  gen::add_random_sets(ex, 4, true, rng);
  cases.emplace_back("edgecount-cross", ex);
  cases.emplace_back("maxmatch-frugal", gen::gnp(kN, 0.1, rng));

  std::ostringstream csv;
  csv << cost_csv_header() << "\n";
  for (const auto& [name, g] : cases) {
    const Scheme& s = find_scheme(name);
    std::vector<CostRow> rows;
    for (std::uint32_t t : kTGrid) {
      RunResult r = run_honest(s, g, {t, 0}, t);
      if (!r.outcome.accepted) {
        v.fail(name + " t=" + std::to_string(t) + " rejected: " + r.outcome.reject_reason);
        continue;
      }
      rows.push_back(cost_row(s, g, {t, 0}, r, s.field_for(g)));
      csv << to_csv(rows.back()) << "\n";
    }
    if (rows.empty()) continue;
    auto spread = [&](auto field) {
      auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                          [&](const CostRow& a, const CostRow& b) { return field(a) < field(b); });
      return static_cast<double>(field(*hi)) / static_cast<double>(std::max<std::uint64_t>(field(*lo), 1));
    };
    const double prod = spread([](const CostRow& r) { return r.product_bits; });
    const double h = spread([](const CostRow& r) { return r.hbits; });
    const double vv = spread([](const CostRow& r) { return r.vbits; });
    v.note(name + fmt(": product spread %.2fx, hcost spread %.1fx, vcost spread %.1fx", prod, h, vv));
    if (prod > 8) v.fail(name + fmt(" product spread %.2fx exceeds 8x", prod));
    if (h < 16) v.fail(name + fmt(" hcost spread %.1fx is below 16x", h));
    if (vv < 16) v.fail(name + fmt(" vcost spread %.1fx is below 16x", vv));
  }
  if (!csv_path.empty()) {
    std::ofstream(csv_path) << csv.str();
    v.note("sweep CSV written to " + csv_path);
  }
  return v;
}

// ---------------------------------------------------------------- 6: micro-invariants

Fe naive_impulse(const FieldConfig& f, std::int64_t u, const Fe& x, std::int64_t size) {
  Fe r = f.one();
  for (std::int64_t k = 1; k <= size; ++k)
    if (k != u) r = r * (x - f(k)) * (f(u) - f(k)).inv();
  return r;
}

int impulse_identities(const FieldConfig& f, Rng& rng) {
  int bad = 0;
  for (std::int64_t size : {1, 2, 3, 5, 8, 13, 32}) {
    const auto& dom = LagrangeDomain::get(f, size);
    for (std::int64_t u = 1; u <= size; ++u)
      for (std::int64_t x = 1; x <= size; ++x) bad += dom.unit_impulse(u, f(x)) != (u == x ? f.one() : f.zero());
    for (int i = 0; i < 20; ++i) {
      Fe x = rng.fe_random(f), total = f.zero();
      auto row = dom.impulse_row(x);
      for (std::int64_t u = 1; u <= size; ++u) {
        bad += row[u - 1] != naive_impulse(f, u, x, size);
        total += row[u - 1];
      }
      bad += total != f.one();
    }
  }
  return bad;
}

int sketch_vs_dense(const FieldConfig& f, Rng& rng) {
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t a = rng.uniform(1, 6), b = rng.uniform(1, 6);
    std::vector<Fe> pt{rng.fe_random(f), rng.fe_random(f)};
    PointSketch sk({static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)}, pt);
    std::vector<std::vector<Fe>> arr(a + 1, std::vector<Fe>(b + 1, f.zero()));
    for (int j = 0; j < 40; ++j) {
      std::int64_t x = rng.uniform(1, a), y = rng.uniform(1, b);
      Fe d = f(rng.uniform(-4, 4));
      sk.update({x, y}, d);
      arr[x][y] += d;
    }
    Fe dense = f.zero();
    for (std::int64_t x = 1; x <= a; ++x)
      for (std::int64_t y = 1; y <= b; ++y)
        dense += arr[x][y] * naive_impulse(f, x, pt[0], a) * naive_impulse(f, y, pt[1], b);
    bad += sk.value() != dense;
  }
  return bad;
}

int fingerprint_order(const FieldConfig& f, Rng& rng) {
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (int j = 0; j < 30; ++j) items.emplace_back(rng.uniform(1, 64), rng.uniform(0, 8));
    const Fe r = rng.fe_random(f), b1 = rng.fe_random(f), b2 = rng.fe_random(f);
    Fingerprint x(r), y(r);
    BallFingerprint bx(b1, b2), by(b1, b2);
    for (auto [i, d] : items) {
      x.update(i, f.one());
      bx.update(i, d, f.one());
    }
    std::shuffle(items.begin(), items.end(), rng.engine());
    for (auto [i, d] : items) {
      y.update(i, f.one());
      by.update(i, d, f.one());
    }
    bad += x.value() != y.value();
    bad += bx.value() != by.value();
  }
  return bad;
}

int shaping_round_trips() {
  int bad = 0;
  for (std::uint32_t n = 1; n <= 64; ++n)
    for (std::uint32_t t = 1; t <= n; ++t) {
      ShapeConfig c = ShapeConfig::from_t(n, t);
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (Vertex v = 1; v <= n; ++v) {
        auto xy = shape_vertex(v, c);
        bad += unshape_vertex(xy.first, xy.second, c) != v;
        bad += xy.first < 1 || xy.first > c.t || xy.second < 1 || xy.second > c.s;
        seen.insert(xy);
      }
      bad += seen.size() != n;
    }
  return bad;
}

int tutte_berge(Rng& rng) {
  int bad = 0;
  auto check = [&](const GraphInstance& g) {
    auto dg = oracle::DenseGraph::from_instance(g);
    auto c = tutte_berge_certificate(dg);
    const int k = static_cast<int>(c.matching.size());
    int odd = 0;
    for (const auto& comp : c.components) odd += comp.size() % 2;
    std::vector<bool> removed(g.n() + 1, false);
    for (auto u : c.ustar) removed[u] = true;
    bad += 2 * k != static_cast<int>(c.ustar.size() + g.n()) - odd;
    bad += k != oracle::matching(dg);
    bad += odd != oracle::odd_components(dg, removed);
  };
  // Every graph on up to 5 vertices, then random graphs up to 10.
  for (std::uint32_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
      GraphInstance g;
      g.header.n = n;
      g.header.model = StreamModel::vanilla;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
      check(g);
    }
  }
  for (int trial = 0; trial < 300; ++trial)
    check(gen::gnp(static_cast<std::uint32_t>(rng.uniform(6, 10)), rng.uniform(1, 6) / 10.0, rng));
  return bad;
}

// Every single-label change must be rejected; prints nothing, returns the number of accepted lies.
int label_perturbation(Rng& rng) {
  const Scheme& s = find_scheme("sssp-unweighted");
  int bad = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const auto n = static_cast<std::uint32_t>(rng.uniform(3, 8));
    GraphInstance g = trial % 2 ? reachable_gnp(n, 0.2, rng) : gen::gnp(n, 0.3, rng);
    g.header.source = static_cast<Vertex>(rng.uniform(1, n));
    const SchemeParams p{2, 0};
    const FieldConfig f = s.field_for(g);
    const ProofTranscript honest = s.prove(g, p, f);
    const std::uint64_t D = honest.blocks()[0].items[0];
    const Vertex src = source_of(g.header);
    auto dist = oracle::bfs(oracle::DenseGraph::from_instance(g), src);
    auto a = final_matrix(g);
    for (Vertex v = 1; v <= n; ++v)
      for (std::int64_t alt = -1; alt <= static_cast<std::int64_t>(D) + 1; ++alt) {
        if (alt == dist[v]) continue;
        auto lie = dist;
        lie[v] = alt;
        std::vector<std::uint64_t> lb{D};
        for (Vertex u = 1; u <= n; ++u) {
          lb.push_back(lie[u] < 0 ? kUnreachable : static_cast<std::uint64_t>(lie[u]));
          if (lie[u] == 1) lb.push_back(a[src][u] ? a[src][u] : 1);
        }
        ProofTranscript bad_t = honest;
        bad_t.blocks()[0].items = lb;
        for (std::uint64_t seed = 0; seed < 3; ++seed) bad += verify(s, g, p, f, bad_t, seed).accepted;
      }
  }
  return bad;
}

Verdict micro_invariants() {
  Verdict v;
  const FieldConfig f = FieldConfig::auto_for(64);
  Rng rng(66);
  const std::pair<const char*, std::function<int()>> suites[] = {
      {"unit impulse identities", [&] { return impulse_identities(f, rng); }},
      {"sketch vs dense interpolation", [&] { return sketch_vs_dense(f, rng); }},
      {"fingerprint order insensitivity", [&] { return fingerprint_order(f, rng); }},
      {"shaping bijection round trips", [] { return shaping_round_trips(); }},
      {"Tutte-Berge certificate balance, n <= 10", [&] { return tutte_berge(rng); }},
      {"exhaustive label perturbation, n <= 8", [&] { return label_perturbation(rng); }},
  };
  for (const auto& [name, fn] : suites) {
    int bad = fn();
    if (bad) v.fail(std::string(name) + ": " + std::to_string(bad) + " failures");
    else v.note(std::string(name) + ": ok");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, known_fail;
  std::string csv;
  app.add_option("--only", only, "run just these criteria");
  app.add_option("--known-fail", known_fail, "criteria expected to fail; reported, but not fatal");
  app.add_option("--csv", csv, "write the tradeoff sweep CSV here");
  CLI11_PARSE(app, argc, argv);

  auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };
  const std::set<int> expected_fail(known_fail.begin(), known_fail.end());

  std::vector<GridPoint> grid;
  Verdict grid_errors;
  if (wanted(3) || wanted(4)) grid = run_grid(grid_errors);

  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"completeness: honest output equals oracle, zero rejects", completeness},
      {"soundness: accepts_wrong <= 2% per policy over 500 trials", soundness},
      {"transcript sizes on the n=64 t grid", [&] { return transcript_sizes(grid, grid_errors); }},
      {"verifier space budgets on the n=64 t grid", [&] { return space_budgets(grid, grid_errors); }},
      {"tradeoff curve: product spread <= 8x, each cost spread >= 16x", [&] { return tradeoff(csv); }},
      {"micro-invariant suites", micro_invariants},
  };

  int rc = 0;
  for (int k = 1; k <= 6; ++k) {
    if (!wanted(k)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v = criteria[k - 1].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool known = expected_fail.count(k) > 0;
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << (known && !v.pass ? " (known)" : "")
              << "  " << criteria[k - 1].first << fmt("  [%.1fs]", secs) << "\n";
    for (const auto& n : v.notes) std::cout << n << "\n";
    if (known && v.pass) std::cout << "  note: listed as a known failure but passed\n";
    if (!v.pass && !known) rc = 1;
  }
  return rc;
}
