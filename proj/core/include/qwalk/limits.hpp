#pragma once

#include <functional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/ctqw.hpp"

namespace qwalk {

enum class DensityKind { arcsine, konno_phi, konno_psi, boundary_psi };

// Closed-form weak-limit densities on a bounded open support. The inverse
// square-root endpoint singularities are integrable; quadrature (integral,
// char_fn) runs through the substitution x = edge * sin(phi), which removes
// them exactly, and cdf() is that substituted integral in closed form.
class LimitDensity {
 public:
  static LimitDensity arcsine();                 // 1/(pi sqrt(1-x^2)) on (-1,1)
  static LimitDensity konno_phi(double s);       // r/(pi (1-x^2) sqrt(s^2-x^2)) on (-s,s)
  static LimitDensity konno_psi(double s);       // rho r/(pi (1-rho^2 x^2) sqrt(s^2-rho^2 x^2))
  static LimitDensity boundary_psi(double s);    // the u = 0 boundary measure (same density)

  double operator()(double x) const;  // 0 outside the open support
  double cdf(double x) const;
  double integral() const;            // quadrature check, = 1 to ~1e-15
  cplx char_fn(double xi) const;      // int e^{i xi x} density(x) dx

  DensityKind kind() const { return kind_; }
  double s() const { return s_; }
  double support_lo() const { return -edge_; }
  double support_hi() const { return edge_; }

 private:
  LimitDensity(DensityKind kind, double s);

  DensityKind kind_;
  double s_;
  double edge_;  // support is (-edge, edge)
  double rho_;   // arcsin(s) scaling for the psi families, 1 otherwise
};

// (1/2pi) int f(theta) dtheta with grid doubling to tol; spectral for the
// analytic periodic integrands used here.
cplx periodic_mean(const std::function<cplx(double)>& f, double tol = 1e-12,
                   int initial_grid = 256, int grid_cap = 1 << 15);

// E_t(k; xi) = sum_x p_t(k;x) e^{i x xi / t}, evaluated from a distribution.
cplx empirical_char_sum(const LatticeDistribution& dist, double xi);

// The convolution form (1/2pi) int e^{i t [k(theta) - k(theta - xi/t)]} dtheta.
cplx empirical_char_integral(const ScalarSymbol& k, double t, double xi);

// Computes both routes, asserts they agree within 1e-9 (ConsistencyFailure
// otherwise) and returns the sum-form value. An already computed
// distribution for (k, t) may be supplied to avoid recomputation.
cplx empirical_char(const ScalarSymbol& k, double t, double xi,
                    const LatticeDistribution* precomputed = nullptr);
double dual_route_gap(const ScalarSymbol& k, double t, double xi,
                      const LatticeDistribution* precomputed = nullptr);

// lim_{t->inf} E_t(k; xi) = (1/2pi) int e^{i xi k'(theta)} dtheta.
cplx limit_char(const ScalarSymbol& k, double xi);

// Characteristic function of the boundary measure mu_{(s,0)}: the arcsine
// law at s = 0, else the psi_s limit law.
cplx boundary_char(double s, double xi);

// sup |empirical CDF - density CDF| over a 2048-point grid spanning both
// supports, augmented with both one-sided values at every atom of the
// rescaled lattice measure (exact for atomic-vs-continuous comparisons).
double ks_distance(const LatticeDistribution& dist, const LimitDensity& density);

// Characteristic functions of mu_{(s,u)} sampled on a uniform grid over
// [0, s_max] x [0, u_max]; u > 0 rows use E_{1/u}(psi_s; .), the u = 0 row
// uses the boundary measures. Reports the largest change between grid
// neighbors over the xi samples.
struct ContinuityReport {
  int n_s = 0, n_u = 0;
  double s_max = 0.0, u_max = 0.0;
  std::vector<double> xi;
  double max_neighbor_gap = 0.0;
};
ContinuityReport continuity_scan(double s_max, double u_max, int n_s, int n_u,
                                 const std::vector<double>& xi);

}  // namespace qwalk
