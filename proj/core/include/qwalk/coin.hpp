#pragma once

#include <functional>
#include <string>

#include "qwalk/mat2.hpp"

namespace qwalk {

// An SU(2) coin [[a, b], [-conj(b), conj(a)]] with ab != 0, together with
// the derived polar data s = |a|, r = |b|, alpha = a/|a|, beta = b/|b| and
// mu = Arg(alpha). Immutable after construction.
struct CoinParameters {
  cplx a;
  cplx b;
  double s;
  double r;
  cplx alpha;
  cplx beta;
  double mu;  // principal argument of alpha, in (-pi, pi]
};

// Validates unitarity (|a|^2 + |b|^2 = 1 within 1e-10) and non-degeneracy
// (a != 0, b != 0) and derives the polar parameters.
// Throws NonUnitaryError / DegenerateCoinError.
CoinParameters make_coin(cplx a, cplx b);

CoinParameters hadamard_coin();  // a = b = 1/sqrt(2)

Mat2 coin_matrix(const CoinParameters& coin);

// phi_s(theta) = arccos(s cos theta), principal branch, range in
// [arccos s, arccos(-s)] subset of (0, pi) for s < 1. Requires 0 <= s < 1.
double eval_phi(double s, double theta);
double eval_phi_derivative(double s, double theta);

// psi_s(theta) = arcsin(s cos theta) / arcsin(s) for 0 < s < 1; the s = 0
// case returns cos(theta) (the analytic limit). Requires 0 <= s < 1.
double eval_psi(double s, double theta);
double eval_psi_derivative(double s, double theta);

enum class SymbolKind { phi, psi, psi0, custom };

// A smooth real-valued 2pi-periodic function on the momentum circle.
// The three named families carry their analytic derivative and exact sup
// norms; custom symbols estimate both on a grid.
class ScalarSymbol {
 public:
  static ScalarSymbol phi(double s);
  static ScalarSymbol psi(double s);
  static ScalarSymbol psi0();
  static ScalarSymbol custom(std::string name, std::function<double(double)> f,
                             std::function<double(double)> derivative = {});

  double operator()(double theta) const { return f_(theta); }
  bool has_derivative() const { return static_cast<bool>(df_); }
  double derivative(double theta) const;

  SymbolKind kind() const { return kind_; }
  double s() const { return s_; }
  const std::string& name() const { return name_; }

  double sup_abs() const { return sup_abs_; }             // sup |k|
  double sup_abs_derivative() const { return sup_dabs_; } // sup |k'|

 private:
  ScalarSymbol() = default;

  SymbolKind kind_ = SymbolKind::custom;
  double s_ = 0.0;
  std::string name_;
  std::function<double(double)> f_;
  std::function<double(double)> df_;
  double sup_abs_ = 0.0;
  double sup_dabs_ = 0.0;
};

}  // namespace qwalk
