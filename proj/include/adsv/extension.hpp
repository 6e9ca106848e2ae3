#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adsv/field.hpp"
#include "adsv/stream.hpp"

namespace adsv {

// Interpolation grid {lo, lo+1, ..., lo+size-1} over a fixed field.
// Holds r-independent tables: inverse Lagrange denominators and power sums.
class LagrangeDomain {
 public:
  LagrangeDomain(const FieldConfig& f, std::uint64_t size, std::int64_t lo = 1);

  // Shared instance per (field, size, lo); tables are immutable after construction.
  static const LagrangeDomain& get(const FieldConfig& f, std::uint64_t size, std::int64_t lo = 1);

  std::uint64_t size() const { return size_; }
  std::int64_t lo() const { return lo_; }
  const FieldConfig& field() const { return f_; }

  // delta_u(x), u a grid point; O(size) field operations.
  Fe unit_impulse(std::int64_t u, const Fe& x) const;
  // delta_u(x) for every grid point u (index u - lo); O(size) via prefix/suffix products.
  std::vector<Fe> impulse_row(const Fe& x) const;
  // sum over grid points w of w^e.
  Fe power_sum(std::uint64_t e) const;

 private:
  FieldConfig f_;
  std::uint64_t size_;
  std::int64_t lo_;
  std::vector<std::uint64_t> inv_den_;
  mutable std::mutex power_mu_;
  mutable std::vector<std::uint64_t> power_sums_;
};

Fe unit_impulse(std::int64_t u, const Fe& x, std::uint64_t domain_size);

// Evaluation of the low-degree extension of an array, maintained under point updates.
class PointSketch {
 public:
  PointSketch(std::vector<std::uint64_t> dims, std::vector<Fe> point);

  void update(const std::vector<std::int64_t>& coords, const Fe& delta);
  const Fe& value() const { return value_; }
  const std::vector<std::uint64_t>& dims() const { return dims_; }
  const std::vector<Fe>& point() const { return point_; }

 private:
  std::vector<std::uint64_t> dims_;
  std::vector<Fe> point_;
  std::vector<const LagrangeDomain*> domains_;
  Fe value_;
};

struct ShapeConfig {
  std::uint32_t n;
  std::uint32_t t;
  std::uint32_t s;

  ShapeConfig(std::uint32_t n_, std::uint32_t t_, std::uint32_t s_);
  static ShapeConfig from_t(std::uint32_t n, std::uint32_t t);
};

// Row-major: x = ceil(v/s), y = ((v-1) mod s) + 1.
std::pair<std::uint32_t, std::uint32_t> shape_vertex(Vertex v, const ShapeConfig& cfg);
Vertex unshape_vertex(std::uint32_t x, std::uint32_t y, const ShapeConfig& cfg);

// Per-variable degree bounds of a coefficient block.
using DegreeBounds = std::vector<std::uint32_t>;

class BlockShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t block_size(const DegreeBounds& bounds);

// Walks exponent tuples in graded order: total degree ascending, ties broken by
// lexicographically increasing tuple, each exponent within its bound.
class MonomialEnumerator {
 public:
  explicit MonomialEnumerator(DegreeBounds bounds);
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool next();

 private:
  bool next_same_degree();
  void first_of_degree(std::uint32_t g);

  DegreeBounds d_;
  std::vector<std::uint32_t> e_;
  std::uint32_t total_ = 0;
  std::uint32_t max_total_ = 0;
};

// Dense coefficient tensor: row-major, first variable slowest.
std::vector<Fe> graded_to_dense(const DegreeBounds& bounds, const std::vector<Fe>& graded);
std::vector<Fe> dense_to_graded(const DegreeBounds& bounds, const std::vector<Fe>& dense);

// Value of a graded coefficient block at a point, by iterated Horner on the dense tensor.
Fe coeffs_eval(const DegreeBounds& bounds, const std::vector<Fe>& graded, const std::vector<Fe>& point);

// Consumes a graded block one coefficient at a time with O(k) state. Tracks the value at
// a point and the sum over a product grid of summation domains.
class StreamingPolyEval {
 public:
  StreamingPolyEval(DegreeBounds bounds, std::vector<Fe> point,
                    std::vector<const LagrangeDomain*> sum_domains);
  void push(const Fe& c);
  bool complete() const { return count_ == total_; }
  std::uint64_t count() const { return count_; }
  const Fe& value() const { return value_; }
  const Fe& grid_sum() const { return sum_; }
  const std::vector<std::uint32_t>& exponents() const { return en_.exponents(); }

 private:
  DegreeBounds bounds_;
  std::vector<Fe> point_;
  std::vector<const LagrangeDomain*> domains_;
  MonomialEnumerator en_;
  std::uint64_t count_ = 0;
  std::uint64_t total_;
  Fe value_;
  Fe sum_;
};

// Dense evaluations at grid points {1..d_i+1} (row-major) -> dense monomial coefficients.
std::vector<Fe> interpolate_dense(const FieldConfig& f, const DegreeBounds& bounds, std::vector<Fe> evals);

// Convenience for provers: evaluate-then-interpolate into a graded block.
std::vector<Fe> graded_from_evaluations(const FieldConfig& f, const DegreeBounds& bounds,
                                        std::vector<Fe> evals);

}  // namespace adsv
