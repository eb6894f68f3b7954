#include "qwalk/coin.hpp"

#include <cmath>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

CoinParameters make_coin(cplx a, cplx b) {
  const double unit_defect = std::abs(std::norm(a) + std::norm(b) - 1.0);
  if (unit_defect > 1e-10)
    throw NonUnitaryError("coin violates |a|^2 + |b|^2 = 1 by " + std::to_string(unit_defect));
  if (a == cplx(0.0, 0.0) || b == cplx(0.0, 0.0))
    throw DegenerateCoinError("coin requires ab != 0");

  CoinParameters c;
  c.a = a;
  c.b = b;
  c.s = std::abs(a);
  c.r = std::abs(b);
  c.alpha = a / c.s;
  c.beta = b / c.r;
  c.mu = std::arg(c.alpha);
  return c;
}

CoinParameters hadamard_coin() {
  const double h = 1.0 / std::sqrt(2.0);
  return make_coin(cplx(h, 0.0), cplx(h, 0.0));
}

Mat2 coin_matrix(const CoinParameters& coin) {
  return {coin.a, coin.b, -std::conj(coin.b), std::conj(coin.a)};
}

namespace {
void require_s_range(double s) {
  if (!(s >= 0.0 && s < 1.0))
    throw DomainError("symbol parameter s must lie in [0, 1), got " + std::to_string(s));
}
}  // namespace

double eval_phi(double s, double theta) {
  require_s_range(s);
  return std::acos(s * std::cos(theta));
}

double eval_phi_derivative(double s, double theta) {
  require_s_range(s);
  const double c = std::cos(theta);
  return s * std::sin(theta) / std::sqrt(1.0 - s * s * c * c);
}

double eval_psi(double s, double theta) {
  require_s_range(s);
  if (s == 0.0) return std::cos(theta);
  return std::asin(s * std::cos(theta)) / std::asin(s);
}

double eval_psi_derivative(double s, double theta) {
  require_s_range(s);
  if (s == 0.0) return -std::sin(theta);
  const double c = std::cos(theta);
  return -s * std::sin(theta) / (std::asin(s) * std::sqrt(1.0 - s * s * c * c));
}

ScalarSymbol ScalarSymbol::phi(double s) {
  require_s_range(s);
  ScalarSymbol k;
  k.kind_ = SymbolKind::phi;
  k.s_ = s;
  k.name_ = "phi";
  k.f_ = [s](double th) { return eval_phi(s, th); };
  k.df_ = [s](double th) { return eval_phi_derivative(s, th); };
  k.sup_abs_ = std::acos(-s);
  k.sup_dabs_ = s;  // attained at theta = pi/2
  return k;
}

ScalarSymbol ScalarSymbol::psi(double s) {
  require_s_range(s);
  if (s == 0.0) return psi0();
  ScalarSymbol k;
  k.kind_ = SymbolKind::psi;
  k.s_ = s;
  k.name_ = "psi";
  k.f_ = [s](double th) { return eval_psi(s, th); };
  k.df_ = [s](double th) { return eval_psi_derivative(s, th); };
  k.sup_abs_ = 1.0;
  k.sup_dabs_ = s / std::asin(s);
  return k;
}

ScalarSymbol ScalarSymbol::psi0() {
  ScalarSymbol k;
  k.kind_ = SymbolKind::psi0;
  k.s_ = 0.0;
  k.name_ = "psi0";
  k.f_ = [](double th) { return std::cos(th); };
  k.df_ = [](double th) { return -std::sin(th); };
  k.sup_abs_ = 1.0;
  k.sup_dabs_ = 1.0;
  return k;
}

ScalarSymbol ScalarSymbol::custom(std::string name, std::function<double(double)> f,
                                  std::function<double(double)> derivative) {
  ScalarSymbol k;
  k.kind_ = SymbolKind::custom;
  k.name_ = std::move(name);
  k.f_ = std::move(f);
  k.df_ = std::move(derivative);
  double sup = 0.0, dsup = 0.0;
  const int n = 4096;
  for (int j = 0; j < n; ++j) {
    const double th = kTwoPi * j / n;
    sup = std::max(sup, std::abs(k.f_(th)));
    if (k.df_) dsup = std::max(dsup, std::abs(k.df_(th)));
  }
  k.sup_abs_ = sup;
  k.sup_dabs_ = dsup;
  return k;
}

double ScalarSymbol::derivative(double theta) const {
  if (!df_) throw DomainError("symbol '" + name_ + "' has no derivative");
  return df_(theta);
}

}  // namespace qwalk
