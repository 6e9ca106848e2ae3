// adsv: honest runs, adversarial trials, cost sweeps and fixture generation for the stream schemes.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "adsv/generate.hpp"
#include "adsv/protocol.hpp"
#include "adsv/transcript.hpp"

using namespace adsv;

namespace {

enum Exit { kAccept = 0, kReject = 1, kConfig = 2 };

struct Source {
  std::string input;
  std::string kind;
  std::uint32_t n = 16;
  double p = 0.3;
  std::int64_t W = 4;
  std::size_t sets = 0;
  std::size_t pairs = 0;
  std::uint64_t seed = 1;
};

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("--input,-i", src.input, "stream file (text or binary)");
  cmd->add_option("--kind", src.kind, "generate the instance instead: a fixture kind or 'auto'");
  cmd->add_option("--n", src.n, "vertices for generated instances")->check(CLI::PositiveNumber);
  cmd->add_option("--p", src.p, "edge probability for generated instances")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--W", src.W, "weight bound for generated instances")->check(CLI::PositiveNumber);
}

// Builds the instance from a file or a generator. `auto` picks a random instance suited to the scheme.
GraphInstance load_instance(const Source& src, const std::string& scheme) {
  if (!src.input.empty() && !src.kind.empty()) throw ConfigError("give --input or --kind, not both");
  if (!src.input.empty()) return load_stream_file(src.input);
  if (src.kind.empty() || src.kind == "auto") {
    Rng rng(src.seed);
    return gen::for_scheme(scheme, src.n, rng);
  }
  return gen::make(src.kind, {src.n, src.p, src.W, src.seed});
}

SchemeParams params_of(std::uint32_t t, std::uint32_t s) { return {t, s}; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << data)) throw ConfigError("cannot write " + path);
}

bool is_path_scheme(const std::string& name) { return name.rfind("sssp", 0) == 0; }

void print_labels(std::ostream& out, const std::string& scheme, const Accepted& a) {
  for (std::size_t v = 1; v < a.labels.size(); ++v) {
    out << v << ' ';
    if (is_path_scheme(scheme)) {
      if (a.labels[v] < 0) out << "inf";
      else out << a.labels[v];
      if (v < a.prev.size() && a.prev[v] > 0) out << ' ' << a.prev[v];
      else out << " -";
    } else {
      out << a.labels[v];
    }
    out << '\n';
  }
}

struct RunOpts {
  std::string scheme;
  Source src;
  std::uint32_t t = 0, s = 0;
  std::string transcript_out, replay;
  bool quiet_labels = false;
};

int cmd_run(const RunOpts& o) {
  const Scheme& scheme = find_scheme(o.scheme);
  GraphInstance g = load_instance(o.src, o.scheme);
  const SchemeParams p = params_of(o.t, o.s);
  scheme.check_instance(g, p);
  const SchemeParams rp = resolve_params(p, g.n());
  const FieldConfig f = scheme.field_for(g);
  const CostBounds bounds = scheme.cost_bounds(g, p);

  ProofTranscript proof;
  if (!o.replay.empty()) {
    try {
      proof = ProofTranscript::deserialize(read_file(o.replay));
    } catch (const TranscriptFormatError& e) {
      throw ConfigError(std::string("bad transcript: ") + e.what());
    }
  } else {
    proof = scheme.prove(g, p, f);
  }
  if (!o.transcript_out.empty()) write_file(o.transcript_out, proof.serialize());

  VerifierOutcome out = verify(scheme, g, p, f, proof, o.src.seed, bounds.vcost);
  std::cout << "scheme=" << scheme.name() << "\n"
            << "n=" << g.n() << " t=" << rp.t << " s=" << rp.s << "\n"
            << "modulus=" << f.modulus() << " bits=" << f.bits() << "\n";
  if (out.accepted) {
    std::cout << "result=accept\noutput=" << out.output.value << "\n";
  } else {
    std::cout << "result=reject\nreason=" << out.reject_reason << "\n";
    if (out.reject_round >= 0) std::cout << "round=" << out.reject_round << "\n";
  }
  std::cout << "hcost_elems=" << proof.element_count() << " hcost_bits=" << proof.element_count() * f.bits()
            << "\nvcost_elems=" << out.vcost_elements << " vcost_bits=" << out.vcost_bits << "\n";
  if (out.accepted && !o.quiet_labels) print_labels(std::cout, o.scheme, out.output);
  return out.accepted ? kAccept : kReject;
}

struct AttackOpts {
  std::string scheme;
  Source src;
  std::uint32_t t = 0, s = 0;
  std::vector<std::string> policies;
  std::uint64_t trials = 500;
};

Mutation honest_policy() {
  return {"honest", [](const Scheme&, const GraphInstance&, const SchemeParams&, const FieldConfig&,
                       const ProofTranscript& honest, Rng&) { return honest; }};
}

int cmd_attack(const AttackOpts& o) {
  if (o.trials == 0) throw ConfigError("--trials must be at least 1");
  const Scheme& scheme = find_scheme(o.scheme);
  GraphInstance g = load_instance(o.src, o.scheme);
  const SchemeParams p = params_of(o.t, o.s);
  scheme.check_instance(g, p);

  std::vector<Mutation> all = scheme.mutations();
  all.push_back(honest_policy());
  std::vector<Mutation> chosen;
  if (o.policies.empty()) {
    chosen = all;
  } else {
    for (const auto& name : o.policies) {
      auto it = std::find_if(all.begin(), all.end(), [&](const Mutation& m) { return m.name == name; });
      if (it == all.end()) throw ConfigError("scheme " + o.scheme + " has no policy '" + name + "'");
      chosen.push_back(*it);
    }
  }
  std::cout << "scheme,policy,trials,accepts_correct,accepts_wrong,rejects,accept_wrong_rate,wilson_lo,wilson_hi\n";
  for (const auto& m : chosen) {
    TrialStats st = run_adversarial(scheme, g, p, m, o.trials, o.src.seed);
    Interval ci = wilson_interval(st.accepts_wrong, st.trials);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f", st.accept_wrong_rate(), ci.lo, ci.hi);
    std::cout << o.scheme << ',' << m.name << ',' << st.trials << ',' << st.accepts_correct << ','
              << st.accepts_wrong << ',' << st.rejects << ',' << buf << '\n';
  }
  return kAccept;
}

struct SweepOpts {
  std::vector<std::string> schemes;
  Source src;
  std::vector<std::uint32_t> ts;
  bool default_grid = true;
  std::string plot;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// log2 hbits against log2 vbits, one polyline per scheme.
std::string svg_plot(const std::vector<CostRow>& rows) {
  const double W = 640, H = 480, M = 56;
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const auto& r : rows) {
    double x = std::log2(std::max<std::uint64_t>(r.vbits, 1)), y = std::log2(std::max<std::uint64_t>(r.hbits, 1));
    xmin = std::min(xmin, x), xmax = std::max(xmax, x), ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  auto px = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
    << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << W / 2 << "\" y=\"" << H - 16 << "\" text-anchor=\"middle\">log2 vcost (bits)</text>\n"
    << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2
    << ")\" text-anchor=\"middle\">log2 hcost (bits)</text>\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::map<std::string, std::vector<const CostRow*>> by;
  for (const auto& r : rows) by[r.scheme].push_back(&r);
  std::size_t k = 0;
  for (const auto& [name, rs] : by) {
    const char* c = colors[k % 6];
    o << "<polyline fill=\"none\" stroke=\"" << c << "\" points=\"";
    for (const auto* r : rs)
      o << px(std::log2(std::max<std::uint64_t>(r->vbits, 1))) << ','
        << py(std::log2(std::max<std::uint64_t>(r->hbits, 1))) << ' ';
    o << "\"/>\n<text x=\"" << W - M - 140 << "\" y=\"" << M + 18 * k << "\" fill=\"" << c << "\">" << name
      << "</text>\n";
    ++k;
  }
  o << "</svg>\n";
  return o.str();
}

int cmd_sweep(const SweepOpts& o) {
  std::vector<CostRow> rows;
  std::cout << cost_csv_header() << "\n";
  for (const auto& name : o.schemes) {
    const Scheme& scheme = find_scheme(name);
    GraphInstance g = load_instance(o.src, name);
    std::vector<std::uint32_t> ts = o.ts;
    if (o.default_grid)
      for (std::uint32_t t = 1; t <= g.n(); t *= 2) ts.push_back(t);
    for (auto t : ts) {
      const SchemeParams p{t, 0};
      RunResult r = run_honest(scheme, g, p, o.src.seed);
      if (!r.outcome.accepted) throw std::runtime_error(name + " rejected an honest run: " + r.outcome.reject_reason);
      rows.push_back(cost_row(scheme, g, p, r, scheme.field_for(g)));
      std::cout << to_csv(rows.back()) << "\n";
    }
  }
  if (!o.plot.empty()) write_file(o.plot, svg_plot(rows));
  return kAccept;
}

struct GenOpts {
  std::string kind;
  Source src;
  std::string out;
  bool binary = false;
  std::optional<Vertex> source, target;
  bool directed = false;
};

int cmd_gen(const GenOpts& o) {
  Source src = o.src;
  GraphInstance g = gen::make(o.kind, {src.n, src.p, src.W, src.seed});
  Rng rng = Rng(src.seed).sub("sets");
  if (src.sets) gen::add_random_sets(g, src.sets, false, rng);
  if (src.pairs) gen::add_random_sets(g, src.pairs, true, rng);
  if (o.source) g.header.source = o.source;
  if (o.target) g.header.target = o.target;
  if (o.directed) g.header.directed = true;
  for (auto v : {g.header.source, g.header.target})
    if (v && (*v < 1 || *v > g.n())) throw ConfigError("source/target outside [1,n]");
  const std::string data = o.binary ? encode_binary(g) : format_stream(g);
  if (o.out.empty()) std::cout << data;
  else write_file(o.out, data);
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annotated data stream schemes: prover, streaming verifier and cost harness"};
  app.require_subcommand(1);
  std::string all_names;
  for (const auto& n : scheme_names()) all_names += (all_names.empty() ? "" : ", ") + n;

  RunOpts run;
  auto* r = app.add_subcommand("run", "prove and verify one instance");
  r->add_option("--scheme", run.scheme, "one of: " + all_names)->required();
  add_source_options(r, run.src);
  r->add_option("--seed", run.src.seed, "verifier and generator seed");
  r->add_option("--t", run.t, "shaping rows t");
  r->add_option("--s", run.s, "shaping columns s");
  r->add_option("--transcript-out,-o", run.transcript_out, "write the prover transcript here");
  r->add_option("--replay", run.replay, "verify this transcript file instead of proving");
  r->add_flag("--no-labels", run.quiet_labels, "omit per-vertex output lines");

  AttackOpts atk;
  auto* a = app.add_subcommand("attack", "adversarial soundness trials, CSV to stdout");
  a->add_option("--scheme", atk.scheme, "scheme name")->required();
  add_source_options(a, atk.src);
  a->add_option("--seed", atk.src.seed, "trial and generator seed");
  a->add_option("--t", atk.t, "shaping rows t");
  a->add_option("--s", atk.s, "shaping columns s");
  a->add_option("--policy", atk.policies, "mutation policy (repeatable; default all plus honest)");
  a->add_option("--trials", atk.trials, "trials per policy");

  SweepOpts sw;
  std::string grid;
  auto* s = app.add_subcommand("sweep", "cost CSV over a grid of t");
  s->add_option("--scheme", sw.schemes, "scheme name (repeatable)")->required();
  add_source_options(s, sw.src);
  s->add_option("--seed", sw.src.seed, "verifier and generator seed");
  auto* grid_opt = s->add_option("--grid", grid, "comma-separated t values (default powers of two up to n)");
  s->add_option("--plot", sw.plot, "write an SVG of log hcost against log vcost");

  GenOpts gn;
  auto* g = app.add_subcommand("gen", "write a fixture stream");
  g->add_option("kind", gn.kind, "gnp, path, cycle, clique, dag, weighted-gnp, adjlist")->required();
  g->add_option("n", gn.src.n, "vertices")->required()->check(CLI::PositiveNumber);
  g->add_option("--seed", gn.src.seed, "generator seed");
  g->add_option("--p", gn.src.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--W", gn.src.W, "weight bound")->check(CLI::PositiveNumber);
  g->add_option("--sets", gn.src.sets, "append this many random vertex sets");
  g->add_option("--pairs", gn.src.pairs, "append this many random U|W set pairs");
  g->add_option("--source", gn.source, "source vertex");
  g->add_option("--target", gn.target, "target vertex");
  g->add_flag("--directed", gn.directed, "mark the stream as directed");
  g->add_option("--out,-o", gn.out, "output path (default stdout)");
  g->add_flag("--binary", gn.binary, "binary stream encoding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kConfig;
  }

  try {
    if (*r) return cmd_run(run);
    if (*a) return cmd_attack(atk);
    if (*s) {
      if (*grid_opt) {
        sw.default_grid = false;
        for (const auto& t : split_csv(grid)) sw.ts.push_back(static_cast<std::uint32_t>(std::stoul(t)));
      }
      return cmd_sweep(sw);
    }
    if (*g) return cmd_gen(gn);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
