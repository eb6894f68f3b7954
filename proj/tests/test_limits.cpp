#include <doctest.h>

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/limits.hpp"
#include "support/oracles.hpp"

using namespace qwalk;

TEST_SUITE("limits") {

TEST_CASE("density point values") {
  const LimitDensity arc = LimitDensity::arcsine();
  CHECK(arc(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(arc(1.5) == 0.0);
  CHECK(arc(-1.0) == 0.0);

  const double s = 0.6, r = 0.8;
  const LimitDensity kphi = LimitDensity::konno_phi(s);
  CHECK(kphi(0.0) == doctest::Approx(r / (kPi * s)).epsilon(1e-14));
  CHECK(kphi(s) == 0.0);
  CHECK(kphi(0.99 * s) > kphi(0.0));  // singular edges dominate the middle
}

TEST_CASE("densities integrate to one") {
  CHECK(LimitDensity::arcsine().integral() == doctest::Approx(1.0).epsilon(1e-10));
  for (double s : {0.3, 0.5, 1.0 / std::sqrt(2.0)}) {
    CHECK(LimitDensity::konno_phi(s).integral() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(LimitDensity::konno_psi(s).integral() == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cdf matches quadrature of the density") {
  for (const LimitDensity& d : {LimitDensity::arcsine(), LimitDensity::konno_phi(0.7),
                                LimitDensity::konno_psi(0.45)}) {
    const double lo = d.support_lo();
    for (double frac : {0.15, 0.5, 0.85}) {
      const double x = lo + frac * (d.support_hi() - lo);
      const cplx q = testing::adaptive_simpson(
          [&d](double y) { return cplx(d(y), 0.0); }, lo + 1e-13, x, 1e-11);
      CHECK(d.cdf(x) == doctest::Approx(q.real()).epsilon(1e-5));
    }
    CHECK(d.cdf(d.support_lo() - 0.1) == 0.0);
    CHECK(d.cdf(d.support_hi() + 0.1) == 1.0);
  }
}

TEST_CASE("scaling relation between the phi and psi limit laws") {
  const double s = 0.62;
  const double rho = std::asin(s);
  const LimitDensity kphi = LimitDensity::konno_phi(s);
  const LimitDensity kpsi = LimitDensity::konno_psi(s);
  for (double x : {-0.6, -0.2, 0.0, 0.35, 0.7}) {
    if (std::abs(rho * x) >= s) continue;
    CHECK(std::abs(kpsi(x) - rho * kphi(rho * x)) < 1e-12);
  }
  // the u = 0 boundary measure is the same density
  const LimitDensity bd = LimitDensity::boundary_psi(s);
  for (double x : {-0.5, 0.0, 0.4}) CHECK(bd(x) == doctest::Approx(kpsi(x)).epsilon(1e-14));
}

TEST_CASE("limit characteristic values") {
  CHECK(std::abs(limit_char(ScalarSymbol::psi0(), 0.0) - cplx(1.0, 0.0)) < 1e-14);
  // (1/2pi) int e^{-i sin theta} dtheta = J_0(1)
  const cplx v = limit_char(ScalarSymbol::psi0(), 1.0);
  CHECK(v.real() == doctest::Approx(0.7651976865579666).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-13);
  CHECK(v.real() == doctest::Approx(std::cyl_bessel_j(0.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("limit characteristic functions are real for the even families") {
  for (const ScalarSymbol& k : {ScalarSymbol::phi(0.55), ScalarSymbol::psi(0.55)}) {
    for (double xi : {0.5, 1.0, 3.0}) CHECK(std::abs(limit_char(k, xi).imag()) < 1e-12);
  }
}

TEST_CASE("limit characteristic function equals the limit density transform") {
  const double s = 1.0 / std::sqrt(2.0);
  for (double xi : {0.5, 1.0, 2.0, 5.0}) {
    const cplx via_prop = limit_char(ScalarSymbol::phi(s), xi);
    const cplx via_density = LimitDensity::konno_phi(s).char_fn(xi);
    CHECK(std::abs(via_prop - via_density) < 1e-8);

    const cplx psi_prop = limit_char(ScalarSymbol::psi(s), xi);
    const cplx psi_density = LimitDensity::konno_psi(s).char_fn(xi);
    CHECK(std::abs(psi_prop - psi_density) < 1e-8);
  }
  // arcsine side
  for (double xi : {1.0, 2.0}) {
    const cplx a = limit_char(ScalarSymbol::psi0(), xi);
    const cplx b = LimitDensity::arcsine().char_fn(xi);
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("empirical characteristic function: dual routes and symmetries") {
  const ScalarSymbol k = ScalarSymbol::psi0();
  const double t = 50.0;
  const LatticeDistribution d = distribution(k, t);
  CHECK(std::abs(empirical_char(k, t, 0.0, &d) - cplx(1.0, 0.0)) < 1e-12);
  for (double xi : {1.0, 2.0, 5.0}) {
    CHECK(dual_route_gap(k, t, xi, &d) < 1e-9);
    const cplx plus = empirical_char(k, t, xi, &d);
    const cplx minus = empirical_char(k, t, -xi, &d);
    CHECK(std::abs(minus - std::conj(plus)) < 1e-12);
    CHECK(std::abs(plus) <= 1.0 + 1e-12);
  }
}

TEST_CASE("ks distance of a point mass against the arcsine law") {
  LatticeDistribution point;
  point.t = 1.0;
  point.symbol_name = "point";
  point.x_max = 0;
  point.p = {1.0};
  point.mass_deficit = 0.0;
  CHECK(ks_distance(point, LimitDensity::arcsine()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ks distance decreases with t for the arcsine family") {
  const ScalarSymbol k = ScalarSymbol::psi0();
  const LimitDensity arc = LimitDensity::arcsine();
  const double k100 = ks_distance(distribution(k, 100.0), arc);
  const double k200 = ks_distance(distribution(k, 200.0), arc);
  const double k400 = ks_distance(distribution(k, 400.0), arc);
  CHECK(k200 < 1.1 * k100);
  CHECK(k400 < 1.1 * k200);
  CHECK(k400 < k100);
}

TEST_CASE("desk-scale weak convergence at t = 500") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(ks_distance(distribution(ScalarSymbol::phi(s), 500.0), LimitDensity::konno_phi(s)) <
        0.1);
}

TEST_CASE("boundary characteristic function stitches the families together") {
  // s = 0 corner is the arcsine law
  CHECK(std::abs(boundary_char(0.0, 1.0) - limit_char(ScalarSymbol::psi0(), 1.0)) < 1e-13);
  // s > 0 equals the psi_s limit law and the boundary density transform
  const double s = 0.35;
  CHECK(std::abs(boundary_char(s, 2.0) - limit_char(ScalarSymbol::psi(s), 2.0)) < 1e-13);
  CHECK(std::abs(boundary_char(s, 2.0) - LimitDensity::boundary_psi(s).char_fn(2.0)) < 1e-8);
}

TEST_CASE("continuity scan gaps shrink when the grid is refined") {
  const std::vector<double> xi = {1.0, 2.0};
  const ContinuityReport coarse = continuity_scan(0.9, 0.02, 4, 3, xi);
  const ContinuityReport fine = continuity_scan(0.9, 0.02, 7, 5, xi);
  CHECK(coarse.max_neighbor_gap > 0.0);
  CHECK(fine.max_neighbor_gap < coarse.max_neighbor_gap);
}

TEST_CASE("u -> 0 convergence along the psi family") {
  const double s = 0.5;
  const ScalarSymbol k = ScalarSymbol::psi(s);
  const cplx lim = limit_char(k, 1.0);
  const double g1 = std::abs(empirical_char(k, 100.0, 1.0) - lim);
  const double g2 = std::abs(empirical_char(k, 200.0, 1.0) - lim);
  CHECK(g2 < g1);
  CHECK(g1 < 1e-3);
}

}  // TEST_SUITE
