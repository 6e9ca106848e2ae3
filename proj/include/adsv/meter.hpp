#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace adsv {

class SpaceExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Counts live Verifier words (field elements and stored vertex ids).
class SpaceMeter {
 public:
  explicit SpaceMeter(std::uint64_t limit = 0) : limit_(limit) {}

  void acquire(std::uint64_t n) {
    live_ += n;
    peak_ = std::max(peak_, live_);
    if (limit_ && live_ > limit_) {
      throw SpaceExceeded("verifier state " + std::to_string(live_) + " exceeds budget " + std::to_string(limit_));
    }
  }
  void release(std::uint64_t n) { live_ -= std::min(n, live_); }

  std::uint64_t live() const { return live_; }
  std::uint64_t peak() const { return peak_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t live_ = 0;
  std::uint64_t peak_ = 0;
};

// RAII registration of n words against a meter.
class Lease {
 public:
  Lease() = default;
  Lease(SpaceMeter& m, std::uint64_t n) : m_(&m), n_(n) { m.acquire(n); }
  Lease(const Lease&) = delete;
  Lease& operator=(const Lease&) = delete;
  Lease(Lease&& o) noexcept : m_(std::exchange(o.m_, nullptr)), n_(std::exchange(o.n_, 0)) {}
  Lease& operator=(Lease&& o) noexcept {
    if (this != &o) {
      drop();
      m_ = std::exchange(o.m_, nullptr);
      n_ = std::exchange(o.n_, 0);
    }
    return *this;
  }
  ~Lease() { drop(); }

  void resize(std::uint64_t n) {
    if (!m_) return;
    if (n > n_) m_->acquire(n - n_);
    else m_->release(n_ - n);
    n_ = n;
  }
  std::uint64_t size() const { return n_; }

 private:
  void drop() {
    if (m_) m_->release(n_);
    m_ = nullptr;
    n_ = 0;
  }
  SpaceMeter* m_ = nullptr;
  std::uint64_t n_ = 0;
};

// Fixed-size metered array.
template <class T>
class MeteredVec {
 public:
  MeteredVec() = default;
  MeteredVec(SpaceMeter& m, std::size_t n, const T& init) : lease_(m, n), v_(n, init) {}

  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const { return v_.size(); }
  void fill(const T& x) { std::fill(v_.begin(), v_.end(), x); }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

 private:
  Lease lease_;
  std::vector<T> v_;
};

// Growable metered list, for Verifiers that store vertex sets explicitly.
template <class T>
class MeteredList {
 public:
  explicit MeteredList(SpaceMeter& m) : lease_(m, 0) {}
  void push_back(const T& x) {
    lease_.resize(v_.size() + 1);
    v_.push_back(x);
  }
  const std::vector<T>& items() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const T& operator[](std::size_t i) const { return v_[i]; }

 private:
  Lease lease_;
  std::vector<T> v_;
};

// A single metered value.
template <class T>
class Cell {
 public:
  Cell(SpaceMeter& m, T init) : lease_(m, 1), v_(std::move(init)) {}
  T& operator*() { return v_; }
  const T& operator*() const { return v_; }
  T* operator->() { return &v_; }
  const T* operator->() const { return &v_; }
  Cell& operator=(const T& x) {
    v_ = x;
    return *this;
  }

 private:
  Lease lease_;
  T v_;
};

}  // namespace adsv
