#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adsv/extension.hpp"
#include "adsv/field.hpp"
#include "adsv/meter.hpp"
#include "adsv/stream.hpp"
#include "adsv/transcript.hpp"

namespace adsv {

// Instance or parameters unusable for a scheme (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shaping parameters; 0 means "derive from the other one and n". Schemes stated as [nt,s] shape
// their inner edge counts themselves.
struct SchemeParams {
  std::uint32_t t = 0;
  std::uint32_t s = 0;
};

// Fills unset parameters (t = 1 when both are unset) and checks t*s >= n.
SchemeParams resolve_params(SchemeParams p, std::uint32_t n);
ShapeConfig shape_of(const SchemeParams& p, std::uint32_t n);

struct Accepted {
  std::int64_t value = 0;
  std::vector<std::int64_t> labels;  // per-vertex output, index 0 unused; empty for scalar outputs
  std::vector<std::int64_t> prev;    // shortest-path parents when the scheme certifies them
  bool operator==(const Accepted&) const = default;
};

struct VerifierOutcome {
  bool accepted = false;
  Accepted output;
  std::string reject_reason;
  int reject_round = -1;
  std::uint64_t vcost_elements = 0;
  std::uint64_t vcost_bits = 0;
};

struct CostBounds {
  std::uint64_t hcost = 0;  // transcript elements
  std::uint64_t vcost = 0;  // live Verifier words
};

class Verifier {
 public:
  virtual ~Verifier() = default;
  virtual void consume(const StreamToken& tok) = 0;
  virtual Accepted finish(TranscriptReader& proof) = 0;
};

class Scheme;

struct Mutation {
  std::string name;
  std::function<ProofTranscript(const Scheme&, const GraphInstance&, const SchemeParams&, const FieldConfig&,
                                const ProofTranscript& honest, Rng&)>
      apply;
};

class Scheme {
 public:
  virtual ~Scheme() = default;
  virtual std::string name() const = 0;
  // Throws ConfigError when the instance or parameters do not fit the scheme.
  virtual void check_instance(const GraphInstance& g, const SchemeParams& p) const = 0;
  virtual FieldConfig field_for(const GraphInstance& g) const { return FieldConfig::auto_for(g.n()); }
  virtual ProofTranscript prove(const GraphInstance& g, const SchemeParams& p, const FieldConfig& f) const = 0;
  virtual std::unique_ptr<Verifier> make_verifier(const InstanceHeader& h, const SchemeParams& p,
                                                  const FieldConfig& f, Rng& rng, SpaceMeter& meter) const = 0;
  virtual Accepted oracle_output(const GraphInstance& g) const = 0;
  virtual bool matches_oracle(const GraphInstance& g, const Accepted& out) const { return out == oracle_output(g); }
  virtual CostBounds cost_bounds(const GraphInstance& g, const SchemeParams& p) const = 0;
  virtual std::vector<Mutation> mutations() const = 0;
  // Whether the set-family part of the input is delivered after the edges.
  virtual bool reads_set_stream() const { return false; }
};

const Scheme& find_scheme(const std::string& name);
std::vector<std::string> scheme_names();

// ---- Verifier helpers ----

// Reads a transcript item as a field element; out-of-range values reject.
Fe read_fe(const FieldConfig& f, std::uint64_t item, const std::string& what);
// Reads a vertex id in [1,n]; anything else rejects.
Vertex read_vertex(std::uint64_t item, std::uint32_t n, const std::string& what);

struct PolyCheck {
  Fe value;     // polynomial at the Verifier's point
  Fe grid_sum;  // sum over the summation grid
};

// Streams a coefficient block through a StreamingPolyEval after checking its declared bounds.
PolyCheck read_poly(const Block& b, const DegreeBounds& expected, const std::vector<Fe>& point,
                    const std::vector<const LagrangeDomain*>& domains, const FieldConfig& f);

// Field value lifted to its canonical integer representative.
inline std::int64_t lift(const Fe& x) { return static_cast<std::int64_t>(x.value()); }
// Centered lift: values above p/2 map to negative integers.
inline std::int64_t lift_signed(const Fe& x) {
  const std::uint64_t p = x.config()->modulus();
  return x.value() > p / 2 ? -static_cast<std::int64_t>(p - x.value()) : static_cast<std::int64_t>(x.value());
}

// ---- Runner ----

struct RunResult {
  VerifierOutcome outcome;
  ProofTranscript transcript;
  CostBounds bounds;
};

VerifierOutcome verify(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, const FieldConfig& f,
                       const ProofTranscript& proof, std::uint64_t seed, std::uint64_t meter_limit = 0);

RunResult run_honest(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, std::uint64_t seed);

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t accepts_correct = 0;
  std::uint64_t accepts_wrong = 0;
  std::uint64_t rejects = 0;
  double accept_wrong_rate() const { return trials ? static_cast<double>(accepts_wrong) / trials : 0.0; }
};

struct Interval {
  double lo;
  double hi;
};
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

TrialStats run_adversarial(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p,
                           const Mutation& mutation, std::uint64_t trials, std::uint64_t seed);

struct CostRow {
  std::string scheme;
  std::uint32_t n;
  std::uint32_t t;
  std::uint32_t s;
  std::uint64_t hcost_elems;
  std::uint64_t vcost_elems;
  std::uint64_t hbits;
  std::uint64_t vbits;
  std::uint64_t product_bits;
};

CostRow cost_row(const Scheme& scheme, const GraphInstance& g, const SchemeParams& p, const RunResult& r,
                 const FieldConfig& f);
std::string cost_csv_header();
std::string to_csv(const CostRow& r);

// ---- Generic mutation policies ----

namespace mutate {

// Adds a random nonzero value to one random coefficient of a block whose label passes the filter.
Mutation coeff_flip(std::function<bool(const std::string&)> filter = nullptr);
// Drops the last item of a random nonempty block.
Mutation truncate();
// Adds c*(X_1 - z) to the named block so its grid sum moves by `delta`; only r_1 = z hides it.
Mutation shift_sum(std::string label, std::int64_t delta,
                   std::function<std::vector<const LagrangeDomain*>(const FieldConfig&, const Block&)> domains);
// Wraps a lying prover.
Mutation lie(std::string name, std::function<ProofTranscript(const GraphInstance&, const SchemeParams&,
                                                             const FieldConfig&, Rng&)> prover);

// Applies shift_sum's algebra in place; used by lying provers that need a consistent-looking block.
void shift_block_sum(Block& b, const FieldConfig& f, const std::vector<const LagrangeDomain*>& domains,
                     const Fe& delta, Rng& rng);

}  // namespace mutate

// Grid domains [t] for each variable of a block.
std::vector<const LagrangeDomain*> uniform_domains(const FieldConfig& f, const Block& b, std::uint64_t size);

}  // namespace adsv
