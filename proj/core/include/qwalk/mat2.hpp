#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  cplx up{0.0, 0.0};
  cplx dn{0.0, 0.0};

  Vec2() = default;
  Vec2(cplx u, cplx d) : up(u), dn(d) {}

  Vec2 operator+(const Vec2& o) const { return {up + o.up, dn + o.dn}; }
  Vec2 operator-(const Vec2& o) const { return {up - o.up, dn - o.dn}; }
  Vec2 operator*(cplx c) const { return {c * up, c * dn}; }
  double norm_sq() const { return std::norm(up) + std::norm(dn); }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline cplx inner(const Vec2& a, const Vec2& b) {
  return a.up * std::conj(b.up) + a.dn * std::conj(b.dn);
}

// Row-major 2x2 complex matrix value type with closed-form determinant,
// inverse and spectral norm. Deliberately self-contained; nothing here
// needs a linear-algebra library.
struct Mat2 {
  std::array<cplx, 4> m{};  // [ m[0] m[1] ; m[2] m[3] ]

  Mat2() = default;
  Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : m{a11, a12, a21, a22} {}

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }
  // [[0, upper], [lower, 0]]
  static Mat2 offdiag(cplx upper, cplx lower) { return {0.0, upper, lower, 0.0}; }

  cplx& operator()(int i, int j) { return m[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

  Mat2 operator+(const Mat2& o) const {
    return {m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]};
  }
  Mat2 operator-(const Mat2& o) const {
    return {m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]};
  }
  Mat2 operator*(const Mat2& o) const {
    return {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
            m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
  }
  Mat2 operator*(cplx c) const { return {c * m[0], c * m[1], c * m[2], c * m[3]}; }
  Vec2 operator*(const Vec2& v) const {
    return {m[0] * v.up + m[1] * v.dn, m[2] * v.up + m[3] * v.dn};
  }

  Mat2 adjoint() const {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
  }
  cplx trace() const { return m[0] + m[3]; }
  cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
  Mat2 inverse() const {
    const cplx d = det();
    return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
  }

  double frobenius_norm() const {
    return std::sqrt(std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]) + std::norm(m[3]));
  }

  // Spectral norm: sqrt of the larger eigenvalue of A*A (closed form).
  double opnorm() const {
    const double t = std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]) + std::norm(m[3]);
    const double d = std::norm(det());
    const double disc = std::max(t * t - 4.0 * d, 0.0);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
  }

  bool is_hermitian(double tol) const { return (*this - adjoint()).opnorm() <= tol; }
  bool is_unitary(double tol) const {
    return (adjoint() * (*this) - identity()).opnorm() <= tol;
  }
};

inline Mat2 operator*(cplx c, const Mat2& a) { return a * c; }
inline Vec2 operator*(cplx c, const Vec2& v) { return v * c; }

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& a) {
  const double tr = a.m[0].real() + a.m[3].real();
  const double dt = (a.m[0] * a.m[3] - a.m[1] * a.m[2]).real();
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * dt, 0.0));
  return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

}  // namespace qwalk
