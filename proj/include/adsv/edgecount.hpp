#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "adsv/extension.hpp"
#include "adsv/field.hpp"
#include "adsv/meter.hpp"
#include "adsv/protocol.hpp"
#include "adsv/stream.hpp"
#include "adsv/transcript.hpp"

namespace adsv {

// Dense 1-indexed (n+1) x (n+1) matrix of field values.
using FeMatrix = std::vector<std::vector<Fe>>;

// a~(r1, w, r2, z) for w, z in [s]: the shaped adjacency array at the Verifier's point (r1, r2).
class EdgeTable {
 public:
  EdgeTable(const FieldConfig& f, const ShapeConfig& shape, bool directed, Rng& rng, SpaceMeter& m);

  // Adds delta to A(u,v), and to A(v,u) unless the table is directed.
  void update(Vertex u, Vertex v, const Fe& delta);

  const Fe& at(std::uint32_t y1, std::uint32_t y2) const { return a_[(y1 - 1) * shape_.s + (y2 - 1)]; }
  const Fe& r1() const { return *r1_; }
  const Fe& r2() const { return *r2_; }
  const ShapeConfig& shape() const { return shape_; }
  const FieldConfig& field() const { return *f_; }
  const LagrangeDomain& domain() const { return *dom_; }

 private:
  void add(Vertex u, Vertex v, const Fe& delta);

  const FieldConfig* f_;
  ShapeConfig shape_;
  bool directed_;
  const LagrangeDomain* dom_;
  Cell<Fe> r1_;
  Cell<Fe> r2_;
  MeteredVec<Fe> a_;
};

// b~(r1, .) and b~(r2, .) for one vertex set, grown one vertex at a time.
class SetSketch {
 public:
  SetSketch(const EdgeTable& table, SpaceMeter& m);
  void extend(Vertex v);
  void clear();
  const Fe& at_r1(std::uint32_t y) const { return b1_[y - 1]; }
  const Fe& at_r2(std::uint32_t y) const { return b2_[y - 1]; }

 private:
  const EdgeTable* table_;
  MeteredVec<Fe> b1_;
  MeteredVec<Fe> b2_;
};

// sum over y1, y2 of u(r1,y1) w(r2,y2) a(r1,y1,r2,y2).
Fe contract(const EdgeTable& a, const SetSketch& u, const SetSketch& w);

DegreeBounds edgecount_bounds(const ShapeConfig& shape);

// Verifier side of one InducedEdgeCount (or CrossEdgeCount) instance over a shared edge table.
// At the end of the stream the accumulator holds p(r1, r2).
class EdgeCounter {
 public:
  EdgeCounter(const EdgeTable& table, bool cross, SpaceMeter& m);

  // side 0 adds to U_i, side 1 to W_i (cross only).
  void add_vertex(Vertex v, int side = 0);
  // Closes the current set or pair. keep_u leaves U_i in place so U_{i+1} can extend it.
  void end_set(bool keep_u = false);
  // Checks the Prover polynomial at (r1, r2) and returns its sum over [t]^2.
  Fe finish(const Block& poly) const;

  const Fe& accumulator() const { return *acc_; }
  DegreeBounds bounds() const { return edgecount_bounds(table_->shape()); }

 private:
  const EdgeTable* table_;
  bool cross_;
  SetSketch u_;
  std::optional<SetSketch> w_;
  Cell<Fe> acc_;
};

// ---- Prover side ----

// Final adjacency as field values; symmetric unless directed.
FeMatrix adjacency_matrix(const FieldConfig& f, const GraphInstance& g);
// N(z, z') = number of i with z in U_i and z' in W_i (W_i = U_i for plain sets).
FeMatrix comembership(const FieldConfig& f, std::uint32_t n, const std::vector<std::vector<Vertex>>& sets);
FeMatrix comembership(const FieldConfig& f, std::uint32_t n,
                      const std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& pairs);

// Values on [2t-1]^2 (row-major) of sum_{y1,y2} N~(X1,y1,X2,y2) A~(X1,y1,X2,y2).
std::vector<Fe> pair_product_evals(const FieldConfig& f, const ShapeConfig& shape, const FeMatrix& nmat,
                                   const FeMatrix& amat);
// The honest p-hat as a graded coefficient block.
std::vector<Fe> edgecount_poly(const FieldConfig& f, const ShapeConfig& shape, const FeMatrix& nmat,
                               const FeMatrix& amat);

// Grid domains of a block whose variables all have bound 2t-2.
std::vector<const LagrangeDomain*> doubled_degree_domains(const FieldConfig& f, const Block& b);

std::unique_ptr<Scheme> make_edgecount_induced();
std::unique_ptr<Scheme> make_edgecount_cross();

}  // namespace adsv
