#pragma once

#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// A finitely supported C^F-valued function on the integer window [-N, N].
// Storage is site-major with site -N at index 0; reductions (norms, sums)
// run in ascending site order so results are reproducible bit for bit.
// F = 2 carries the coin register, F = 1 is the scalar lattice.
template <int F>
class WindowedState {
  static_assert(F == 1 || F == 2, "fiber dimension must be 1 or 2");

 public:
  explicit WindowedState(int radius) : radius_(radius) {
    if (radius < 0) throw DomainError("window radius must be nonnegative");
    amp_.assign(static_cast<std::size_t>(F) * (2 * radius + 1), cplx(0.0, 0.0));
  }

  static WindowedState delta(int radius, int site, int component = 0) {
    WindowedState f(radius);
    if (!f.in_window(site))
      throw WindowOverflowError("delta site " + std::to_string(site) + " outside window");
    f.at(site, component) = 1.0;
    return f;
  }

  int radius() const { return radius_; }
  int sites() const { return 2 * radius_ + 1; }
  static constexpr int fibers() { return F; }

  bool in_window(int site) const { return site >= -radius_ && site <= radius_; }

  cplx& at(int site, int component = 0) {
    return amp_[static_cast<std::size_t>(F) * (site + radius_) + component];
  }
  const cplx& at(int site, int component = 0) const {
    return amp_[static_cast<std::size_t>(F) * (site + radius_) + component];
  }

  double norm_sq() const {
    double acc = 0.0;
    for (const cplx& z : amp_) acc += std::norm(z);
    return acc;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  cplx inner(const WindowedState& g) const {
    const int n = std::min(radius_, g.radius_);
    cplx acc(0.0, 0.0);
    for (int x = -n; x <= n; ++x)
      for (int c = 0; c < F; ++c) acc += at(x, c) * std::conj(g.at(x, c));
    return acc;
  }

  bool is_zero() const {
    for (const cplx& z : amp_)
      if (z != cplx(0.0, 0.0)) return false;
    return true;
  }

  // Exact support bounds (scan for nonzero entries). Returns {1, -1} markers
  // with lo > hi when the state is identically zero.
  int support_min() const {
    for (int x = -radius_; x <= radius_; ++x)
      for (int c = 0; c < F; ++c)
        if (at(x, c) != cplx(0.0, 0.0)) return x;
    return radius_ + 1;
  }
  int support_max() const {
    for (int x = radius_; x >= -radius_; --x)
      for (int c = 0; c < F; ++c)
        if (at(x, c) != cplx(0.0, 0.0)) return x;
    return -radius_ - 1;
  }

  WindowedState embedded(int new_radius) const {
    if (new_radius < radius_ && (support_min() < -new_radius || support_max() > new_radius))
      throw WindowOverflowError("embedding would drop support");
    WindowedState g(new_radius);
    const int n = std::min(radius_, new_radius);
    for (int x = -n; x <= n; ++x)
      for (int c = 0; c < F; ++c) g.at(x, c) = at(x, c);
    return g;
  }

  WindowedState& operator+=(const WindowedState& o) {
    for (int x = -radius_; x <= radius_; ++x)
      for (int c = 0; c < F; ++c) at(x, c) += o.in_window(x) ? o.at(x, c) : cplx(0.0);
    return *this;
  }
  WindowedState& operator-=(const WindowedState& o) {
    for (int x = -radius_; x <= radius_; ++x)
      for (int c = 0; c < F; ++c) at(x, c) -= o.in_window(x) ? o.at(x, c) : cplx(0.0);
    return *this;
  }
  WindowedState& operator*=(cplx c) {
    for (cplx& z : amp_) z *= c;
    return *this;
  }
  WindowedState operator-(const WindowedState& o) const {
    WindowedState g(*this);
    g -= o;
    return g;
  }
  WindowedState operator+(const WindowedState& o) const {
    WindowedState g(*this);
    g += o;
    return g;
  }
  WindowedState operator*(cplx c) const {
    WindowedState g(*this);
    g *= c;
    return g;
  }

 private:
  int radius_;
  std::vector<cplx> amp_;
};

using SpinorState = WindowedState<2>;
using ScalarState = WindowedState<1>;

// (tau^n f)(x) = f(x - n); throws WindowOverflow when nonzero amplitude
// would leave the window.
template <int F>
WindowedState<F> shift(const WindowedState<F>& f, int n) {
  const int N = f.radius();
  WindowedState<F> g(N);
  for (int x = -N; x <= N; ++x) {
    const int src = x - n;
    if (f.in_window(src)) {
      for (int c = 0; c < F; ++c) g.at(x, c) = f.at(src, c);
    }
  }
  // anything nonzero outside the shifted range is lost amplitude
  if (!f.is_zero()) {
    const int lo = f.support_min(), hi = f.support_max();
    if (lo + n < -N || hi + n > N)
      throw WindowOverflowError("shift by " + std::to_string(n) + " leaves window [-" +
                                std::to_string(N) + ", " + std::to_string(N) + "]");
  }
  return g;
}

// One step of the coined walk: g(x) = T*(f_up(x-1), f_dn(x+1)).
// Lossless iff f_up(N) = 0 and f_dn(-N) = 0; otherwise WindowOverflow.
// Output support is the input support dilated by exactly one site (band-1).
SpinorState walk_step(const Mat2& coin, const SpinorState& f);
SpinorState walk_step(const CoinParameters& coin, const SpinorState& f);

// Adjoint step: g(x) = P1 (T* f)(x+1) + P2 (T* f)(x-1).
SpinorState walk_step_adjoint(const Mat2& coin, const SpinorState& f);

SpinorState walk_evolve(const CoinParameters& coin, const SpinorState& f, int steps);

// A banded operator  sum_{|y| <= K} entries(y) tau^y  with a certified bound
// on the operator norm of the discarded tail.
struct MatrixKernel {
  int radius = 0;
  std::vector<Mat2> entries;  // offset y + radius
  double tail_bound = 0.0;

  static MatrixKernel zero(int radius);
  Mat2& at(int offset) { return entries[static_cast<std::size_t>(offset + radius)]; }
  const Mat2& at(int offset) const { return entries[static_cast<std::size_t>(offset + radius)]; }

  // max over offsets of || K(-y) - K(y)* ||
  double self_adjoint_defect() const;
};

// g(x) = sum_{|y| <= K} K(y) f(x - y); out-of-window reads are zero and the
// result is restricted to f's window. The truncation error is bounded by
// apply_error_bound().
SpinorState apply_kernel(const MatrixKernel& kernel, const SpinorState& f);
double apply_error_bound(const MatrixKernel& kernel, const SpinorState& f);

}  // namespace qwalk
