#include "adsv/extension.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace adsv {

LagrangeDomain::LagrangeDomain(const FieldConfig& f, std::uint64_t size, std::int64_t lo)
    : f_(f), size_(size), lo_(lo), inv_den_(size) {
  if (size == 0) throw std::invalid_argument("empty interpolation domain");
  if (size >= f.modulus()) throw std::invalid_argument("domain larger than the field");
  // prod_{x' != u} (u - x') = (i)! * (-1)^(size-1-i) * (size-1-i)!, i = u - lo.
  std::vector<std::uint64_t> fact(size, 1);
  for (std::uint64_t i = 1; i < size; ++i) fact[i] = f.mul(fact[i - 1], i % f.modulus());
  for (std::uint64_t i = 0; i < size; ++i) {
    std::uint64_t d = f.mul(fact[i], fact[size - 1 - i]);
    if ((size - 1 - i) % 2) d = f.sub(0, d);
    inv_den_[i] = f.inv(d);
  }
}

const LagrangeDomain& LagrangeDomain::get(const FieldConfig& f, std::uint64_t size, std::int64_t lo) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, std::int64_t>, std::unique_ptr<LagrangeDomain>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{f.modulus(), size, lo}];
  if (!slot) slot = std::make_unique<LagrangeDomain>(f, size, lo);
  return *slot;
}

Fe LagrangeDomain::unit_impulse(std::int64_t u, const Fe& x) const {
  if (u < lo_ || u >= lo_ + static_cast<std::int64_t>(size_)) {
    throw std::out_of_range("impulse point " + std::to_string(u) + " outside domain");
  }
  const FieldConfig& f = *x.config();
  std::uint64_t acc = inv_den_[static_cast<std::uint64_t>(u - lo_)];
  for (std::uint64_t i = 0; i < size_; ++i) {
    std::int64_t xp = lo_ + static_cast<std::int64_t>(i);
    if (xp == u) continue;
    acc = f.mul(acc, f.sub(x.value(), f(xp).value()));
  }
  return {acc, x.config()};
}

std::vector<Fe> LagrangeDomain::impulse_row(const Fe& x) const {
  const FieldConfig& f = *x.config();
  std::vector<std::uint64_t> diff(size_), pre(size_ + 1, 1), suf(size_ + 1, 1);
  for (std::uint64_t i = 0; i < size_; ++i) diff[i] = f.sub(x.value(), f(lo_ + static_cast<std::int64_t>(i)).value());
  for (std::uint64_t i = 0; i < size_; ++i) pre[i + 1] = f.mul(pre[i], diff[i]);
  for (std::uint64_t i = size_; i-- > 0;) suf[i] = f.mul(suf[i + 1], diff[i]);
  std::vector<Fe> out(size_);
  for (std::uint64_t i = 0; i < size_; ++i) {
    out[i] = Fe(f.mul(f.mul(pre[i], suf[i + 1]), inv_den_[i]), x.config());
  }
  return out;
}

Fe LagrangeDomain::power_sum(std::uint64_t e) const {
  const FieldConfig& f = f_;
  std::lock_guard lock(power_mu_);
  if (e >= power_sums_.size()) {
    std::uint64_t from = power_sums_.size();
    power_sums_.resize(e + 1, 0);
    for (std::uint64_t i = 0; i < size_; ++i) {
      std::uint64_t w = f(lo_ + static_cast<std::int64_t>(i)).value();
      std::uint64_t pw = f.pow(w, from);
      for (std::uint64_t k = from; k <= e; ++k) {
        power_sums_[k] = f.add(power_sums_[k], pw);
        pw = f.mul(pw, w);
      }
    }
  }
  return {power_sums_[e], &f_};
}

Fe unit_impulse(std::int64_t u, const Fe& x, std::uint64_t domain_size) {
  return LagrangeDomain::get(*x.config(), domain_size).unit_impulse(u, x);
}

PointSketch::PointSketch(std::vector<std::uint64_t> dims, std::vector<Fe> point)
    : dims_(std::move(dims)), point_(std::move(point)) {
  if (dims_.size() != point_.size() || point_.empty()) throw std::invalid_argument("sketch dims/point mismatch");
  for (auto d : dims_) domains_.push_back(&LagrangeDomain::get(*point_[0].config(), d));
  value_ = point_[0].config()->zero();
}

void PointSketch::update(const std::vector<std::int64_t>& coords, const Fe& delta) {
  if (coords.size() != dims_.size()) throw std::out_of_range("coordinate arity mismatch");
  Fe term = delta;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1 || coords[i] > static_cast<std::int64_t>(dims_[i])) {
      throw std::out_of_range("sketch coordinate outside domain");
    }
    term *= domains_[i]->unit_impulse(coords[i], point_[i]);
  }
  value_ += term;
}

ShapeConfig::ShapeConfig(std::uint32_t n_, std::uint32_t t_, std::uint32_t s_) : n(n_), t(t_), s(s_) {
  if (t == 0 || s == 0 || static_cast<std::uint64_t>(t) * s < n) {
    throw std::invalid_argument("shaping needs t*s >= n");
  }
}

ShapeConfig ShapeConfig::from_t(std::uint32_t n, std::uint32_t t) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  return ShapeConfig(n, t, (n + t - 1) / t);
}

std::pair<std::uint32_t, std::uint32_t> shape_vertex(Vertex v, const ShapeConfig& cfg) {
  if (v < 1 || v > cfg.n) throw std::out_of_range("vertex outside [1,n]");
  return {(v + cfg.s - 1) / cfg.s, (v - 1) % cfg.s + 1};
}

Vertex unshape_vertex(std::uint32_t x, std::uint32_t y, const ShapeConfig& cfg) {
  if (x < 1 || x > cfg.t || y < 1 || y > cfg.s) throw std::out_of_range("shaped pair outside grid");
  std::uint64_t v = static_cast<std::uint64_t>(x - 1) * cfg.s + y;
  if (v > cfg.n) throw std::out_of_range("shaped pair beyond n");
  return static_cast<Vertex>(v);
}

std::uint64_t block_size(const DegreeBounds& bounds) {
  std::uint64_t n = 1;
  for (auto d : bounds) n *= static_cast<std::uint64_t>(d) + 1;
  return n;
}

MonomialEnumerator::MonomialEnumerator(DegreeBounds bounds) : d_(std::move(bounds)), e_(d_.size(), 0) {
  max_total_ = std::accumulate(d_.begin(), d_.end(), 0u);
}

void MonomialEnumerator::first_of_degree(std::uint32_t g) {
  // Lexicographically smallest: push mass to the last variables.
  for (std::size_t i = e_.size(); i-- > 0;) {
    e_[i] = std::min(d_[i], g);
    g -= e_[i];
  }
}

bool MonomialEnumerator::next_same_degree() {
  const std::size_t k = e_.size();
  if (k < 2) return false;
  std::uint32_t suffix = e_[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    if (e_[i] < d_[i] && suffix >= 1) {
      ++e_[i];
      std::uint32_t rest = suffix - 1;
      for (std::size_t j = k; j-- > i + 1;) {
        e_[j] = std::min(d_[j], rest);
        rest -= e_[j];
      }
      return true;
    }
    suffix += e_[i];
  }
  return false;
}

bool MonomialEnumerator::next() {
  if (next_same_degree()) return true;
  if (total_ == max_total_) return false;
  first_of_degree(++total_);
  return true;
}

namespace {

std::uint64_t dense_index(const DegreeBounds& bounds, const std::vector<std::uint32_t>& e) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) idx = idx * (bounds[i] + 1) + e[i];
  return idx;
}

}  // namespace

std::vector<Fe> graded_to_dense(const DegreeBounds& bounds, const std::vector<Fe>& graded) {
  if (graded.size() != block_size(bounds)) throw BlockShapeError("coefficient block length does not match bounds");
  std::vector<Fe> dense(graded.size());
  MonomialEnumerator en(bounds);
  for (std::size_t i = 0; i < graded.size(); ++i) {
    dense[dense_index(bounds, en.exponents())] = graded[i];
    en.next();
  }
  return dense;
}

std::vector<Fe> dense_to_graded(const DegreeBounds& bounds, const std::vector<Fe>& dense) {
  if (dense.size() != block_size(bounds)) throw BlockShapeError("dense tensor length does not match bounds");
  std::vector<Fe> graded(dense.size());
  MonomialEnumerator en(bounds);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    graded[i] = dense[dense_index(bounds, en.exponents())];
    en.next();
  }
  return graded;
}

Fe coeffs_eval(const DegreeBounds& bounds, const std::vector<Fe>& graded, const std::vector<Fe>& point) {
  if (point.size() != bounds.size()) throw BlockShapeError("point arity does not match bounds");
  std::vector<Fe> cur = graded_to_dense(bounds, graded);
  // Contract the last variable first; each pass shrinks the tensor by one axis.
  for (std::size_t ax = bounds.size(); ax-- > 0;) {
    const std::uint64_t len = bounds[ax] + 1;
    std::vector<Fe> next(cur.size() / len);
    for (std::size_t i = 0; i < next.size(); ++i) {
      Fe acc = cur[i * len + len - 1];
      for (std::uint64_t k = len - 1; k-- > 0;) acc = acc * point[ax] + cur[i * len + k];
      next[i] = acc;
    }
    cur = std::move(next);
  }
  return cur.at(0);
}

StreamingPolyEval::StreamingPolyEval(DegreeBounds bounds, std::vector<Fe> point,
                                     std::vector<const LagrangeDomain*> sum_domains)
    : bounds_(std::move(bounds)),
      point_(std::move(point)),
      domains_(std::move(sum_domains)),
      en_(bounds_),
      total_(block_size(bounds_)) {
  if (point_.size() != bounds_.size() || domains_.size() != bounds_.size() || point_.empty()) {
    throw BlockShapeError("evaluator arity mismatch");
  }
  value_ = point_[0].config()->zero();
  sum_ = value_;
}

void StreamingPolyEval::push(const Fe& c) {
  if (count_ == total_) throw BlockShapeError("coefficient block longer than its bounds");
  const auto& e = en_.exponents();
  Fe mono = c, grid = c;
  for (std::size_t i = 0; i < e.size(); ++i) {
    mono *= point_[i].pow(e[i]);
    grid *= domains_[i]->power_sum(e[i]);
  }
  value_ += mono;
  sum_ += grid;
  ++count_;
  en_.next();
}

std::vector<Fe> interpolate_dense(const FieldConfig& f, const DegreeBounds& bounds, std::vector<Fe> evals) {
  if (evals.size() != block_size(bounds)) throw BlockShapeError("evaluation tensor length does not match bounds");
  std::uint64_t stride = 1;
  for (std::size_t ax = bounds.size(); ax-- > 0;) {
    const std::uint64_t len = bounds[ax] + 1;
    std::vector<std::uint64_t> invs(len + 1, 1);
    for (std::uint64_t k = 1; k <= len; ++k) invs[k] = f.inv(k);
    const std::uint64_t outer = evals.size() / (len * stride);
    std::vector<std::uint64_t> c(len), poly(len);
    for (std::uint64_t o = 0; o < outer; ++o) {
      for (std::uint64_t in = 0; in < stride; ++in) {
        const std::uint64_t base = o * len * stride + in;
        for (std::uint64_t k = 0; k < len; ++k) c[k] = evals[base + k * stride].value();
        // Newton divided differences at nodes 1..len (spacing 1).
        for (std::uint64_t lvl = 1; lvl < len; ++lvl)
          for (std::uint64_t k = len - 1; k >= lvl; --k) c[k] = f.mul(f.sub(c[k], c[k - 1]), invs[lvl]);
        std::fill(poly.begin(), poly.end(), 0);
        poly[0] = c[len - 1];
        std::uint64_t deg = 0;
        for (std::uint64_t k = len - 1; k-- > 0;) {
          // poly = poly * (X - (k+1)) + c[k]
          const std::uint64_t node = (k + 1) % f.modulus();
          for (std::uint64_t j = deg + 1; j > 0; --j) poly[j] = f.sub(poly[j - 1], f.mul(poly[j], node));
          poly[0] = f.sub(c[k], f.mul(poly[0], node));
          ++deg;
        }
        for (std::uint64_t k = 0; k < len; ++k) evals[base + k * stride] = Fe(poly[k], &f);
      }
    }
    stride *= len;
  }
  return evals;
}

std::vector<Fe> graded_from_evaluations(const FieldConfig& f, const DegreeBounds& bounds, std::vector<Fe> evals) {
  return dense_to_graded(bounds, interpolate_dense(f, bounds, std::move(evals)));
}

}  // namespace adsv
