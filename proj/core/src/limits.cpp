#include "qwalk/limits.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

LimitDensity::LimitDensity(DensityKind kind, double s) : kind_(kind), s_(s) {
  switch (kind) {
    case DensityKind::arcsine:
      edge_ = 1.0;
      rho_ = 1.0;
      break;
    case DensityKind::konno_phi:
      if (!(s > 0.0 && s < 1.0)) throw DomainError("konno_phi requires 0 < s < 1");
      edge_ = s;
      rho_ = 1.0;
      break;
    case DensityKind::konno_psi:
    case DensityKind::boundary_psi:
      if (!(s > 0.0 && s < 1.0)) throw DomainError("psi-family density requires 0 < s < 1");
      rho_ = std::asin(s);
      edge_ = s / rho_;
      break;
  }
}

LimitDensity LimitDensity::arcsine() { return {DensityKind::arcsine, 0.0}; }
LimitDensity LimitDensity::konno_phi(double s) { return {DensityKind::konno_phi, s}; }
LimitDensity LimitDensity::konno_psi(double s) { return {DensityKind::konno_psi, s}; }
LimitDensity LimitDensity::boundary_psi(double s) { return {DensityKind::boundary_psi, s}; }

double LimitDensity::operator()(double x) const {
  if (x <= -edge_ || x >= edge_) return 0.0;
  switch (kind_) {
    case DensityKind::arcsine:
      return 1.0 / (kPi * std::sqrt(std::max(1.0 - x * x, 0.0)));
    case DensityKind::konno_phi: {
      const double r = std::sqrt(1.0 - s_ * s_);
      return r / (kPi * (1.0 - x * x) * std::sqrt(std::max(s_ * s_ - x * x, 0.0)));
    }
    case DensityKind::konno_psi:
    case DensityKind::boundary_psi: {
      const double r = std::sqrt(1.0 - s_ * s_);
      const double y = rho_ * x;
      return rho_ * r / (kPi * (1.0 - y * y) * std::sqrt(std::max(s_ * s_ - y * y, 0.0)));
    }
  }
  return 0.0;
}

double LimitDensity::cdf(double x) const {
  if (x <= -edge_) return 0.0;
  if (x >= edge_) return 1.0;
  switch (kind_) {
    case DensityKind::arcsine:
      return 0.5 + std::asin(std::clamp(x, -1.0, 1.0)) / kPi;
    case DensityKind::konno_phi: {
      const double r = std::sqrt(1.0 - s_ * s_);
      const double w = std::sqrt(std::max(s_ * s_ - x * x, 0.0));
      if (w == 0.0) return x > 0.0 ? 1.0 : 0.0;
      return 0.5 + std::atan(r * x / w) / kPi;
    }
    case DensityKind::konno_psi:
    case DensityKind::boundary_psi: {
      const double r = std::sqrt(1.0 - s_ * s_);
      const double y = rho_ * x;
      const double w = std::sqrt(std::max(s_ * s_ - y * y, 0.0));
      if (w == 0.0) return y > 0.0 ? 1.0 : 0.0;
      return 0.5 + std::atan(r * y / w) / kPi;
    }
  }
  return 0.0;
}

double LimitDensity::integral() const {
  // x = edge sin(phi); the substituted integrand extends to a smooth
  // 2pi-periodic function with f(pi - phi) = f(phi), so the integral over
  // [-pi/2, pi/2] is half the full-circle integral.
  switch (kind_) {
    case DensityKind::arcsine:
      return periodic_mean([](double) { return cplx(1.0, 0.0); }).real();
    case DensityKind::konno_phi:
    case DensityKind::konno_psi:
    case DensityKind::boundary_psi: {
      const double s = s_;
      const double r = std::sqrt(1.0 - s * s);
      return periodic_mean([s, r](double phi) {
               const double sn = s * std::sin(phi);
               return cplx(r / (1.0 - sn * sn), 0.0);
             })
          .real();
    }
  }
  return 0.0;
}

cplx LimitDensity::char_fn(double xi) const {
  switch (kind_) {
    case DensityKind::arcsine:
      return periodic_mean([xi](double phi) {
        const double a = xi * std::sin(phi);
        return cplx(std::cos(a), std::sin(a));
      });
    case DensityKind::konno_phi:
    case DensityKind::konno_psi:
    case DensityKind::boundary_psi: {
      // psi families: char_psi(xi) = char_phi(xi / rho)
      const double s = s_;
      const double r = std::sqrt(1.0 - s * s);
      const double scaled = xi / rho_;
      return periodic_mean([s, r, scaled](double phi) {
        const double sn = s * std::sin(phi);
        const double a = scaled * sn;
        return cplx(std::cos(a), std::sin(a)) * (r / (1.0 - sn * sn));
      });
    }
  }
  return cplx(0.0, 0.0);
}

cplx periodic_mean(const std::function<cplx(double)>& f, double tol, int initial_grid,
                   int grid_cap) {
  int m = initial_grid;
  auto mean_at = [&f](int n) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) acc += f(kTwoPi * j / n);
    return acc / static_cast<double>(n);
  };
  cplx coarse = mean_at(m);
  while (true) {
    if (2 * m > grid_cap)
      throw ResolutionTooLowError("periodic quadrature did not converge below the grid cap");
    const cplx fine = mean_at(2 * m);
    if (std::abs(fine - coarse) < tol) return fine;
    coarse = fine;
    m *= 2;
  }
}

cplx empirical_char_sum(const LatticeDistribution& dist, double xi) {
  if (dist.t == 0.0) throw DomainError("characteristic function needs t != 0");
  cplx acc(0.0, 0.0);
  for (int x = -dist.x_max; x <= dist.x_max; ++x) {
    const double a = static_cast<double>(x) * xi / dist.t;
    acc += dist.at(x) * cplx(std::cos(a), std::sin(a));
  }
  return acc;
}

cplx empirical_char_integral(const ScalarSymbol& k, double t, double xi) {
  if (t == 0.0) throw DomainError("characteristic function needs t != 0");
  const double h = xi / t;
  return periodic_mean(
      [&k, t, h](double th) {
        const double phase = t * (k(th) - k(th - h));
        return cplx(std::cos(phase), std::sin(phase));
      },
      1e-12, 1024);
}

cplx empirical_char(const ScalarSymbol& k, double t, double xi,
                    const LatticeDistribution* precomputed) {
  LatticeDistribution local;
  const LatticeDistribution* dist = precomputed;
  if (dist == nullptr) {
    local = distribution(k, t);
    dist = &local;
  }
  const cplx sum_form = empirical_char_sum(*dist, xi);
  const cplx int_form = empirical_char_integral(k, t, xi);
  const double gap = std::abs(sum_form - int_form);
  if (gap > 1e-9)
    throw ConsistencyFailureError("characteristic-function routes disagree by " +
                                  std::to_string(gap));
  return sum_form;
}

double dual_route_gap(const ScalarSymbol& k, double t, double xi,
                      const LatticeDistribution* precomputed) {
  LatticeDistribution local;
  const LatticeDistribution* dist = precomputed;
  if (dist == nullptr) {
    local = distribution(k, t);
    dist = &local;
  }
  return std::abs(empirical_char_sum(*dist, xi) - empirical_char_integral(k, t, xi));
}

cplx limit_char(const ScalarSymbol& k, double xi) {
  if (!k.has_derivative())
    throw DomainError("limit_char needs a symbol with an analytic derivative");
  return periodic_mean(
      [&k, xi](double th) {
        const double a = xi * k.derivative(th);
        return cplx(std::cos(a), std::sin(a));
      },
      1e-12, 1024);
}

cplx boundary_char(double s, double xi) {
  if (s == 0.0) return limit_char(ScalarSymbol::psi0(), xi);
  return limit_char(ScalarSymbol::psi(s), xi);
}

double ks_distance(const LatticeDistribution& dist, const LimitDensity& density) {
  const double t = (dist.t == 0.0) ? 1.0 : std::abs(dist.t);

  // atoms of the rescaled measure, ascending
  const int n = 2 * dist.x_max + 1;
  std::vector<double> pos(static_cast<std::size_t>(n));
  std::vector<double> prefix(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (int x = -dist.x_max; x <= dist.x_max; ++x) {
    acc += dist.at(x);
    pos[static_cast<std::size_t>(x + dist.x_max)] = static_cast<double>(x) / t;
    prefix[static_cast<std::size_t>(x + dist.x_max)] = acc;
  }
  auto empirical_cdf = [&](double y) {
    const auto it = std::upper_bound(pos.begin(), pos.end(), y);
    if (it == pos.begin()) return 0.0;
    return prefix[static_cast<std::size_t>(it - pos.begin() - 1)];
  };

  double worst = 0.0;
  // both one-sided limits at every atom
  for (int i = 0; i < n; ++i) {
    const double y = pos[static_cast<std::size_t>(i)];
    const double f = density.cdf(y);
    worst = std::max(worst, std::abs(prefix[static_cast<std::size_t>(i)] - f));
    const double left = (i == 0) ? 0.0 : prefix[static_cast<std::size_t>(i - 1)];
    worst = std::max(worst, std::abs(left - f));
  }
  // 2048-point grid across the union of supports
  const double lo = std::min(density.support_lo(), pos.front());
  const double hi = std::max(density.support_hi(), pos.back());
  const double pad = 0.02 * (hi - lo);
  const int grid = 2048;
  for (int i = 0; i < grid; ++i) {
    const double y = (lo - pad) + (hi - lo + 2 * pad) * i / (grid - 1);
    worst = std::max(worst, std::abs(empirical_cdf(y) - density.cdf(y)));
  }
  return worst;
}

ContinuityReport continuity_scan(double s_max, double u_max, int n_s, int n_u,
                                 const std::vector<double>& xi) {
  if (n_s < 2 || n_u < 2) throw DomainError("continuity scan needs at least a 2x2 grid");
  if (!(s_max > 0.0 && s_max < 1.0) || !(u_max > 0.0))
    throw DomainError("continuity scan needs 0 < s_max < 1 and u_max > 0");

  ContinuityReport rep;
  rep.n_s = n_s;
  rep.n_u = n_u;
  rep.s_max = s_max;
  rep.u_max = u_max;
  rep.xi = xi;

  std::vector<std::vector<std::vector<cplx>>> table(
      static_cast<std::size_t>(n_s),
      std::vector<std::vector<cplx>>(static_cast<std::size_t>(n_u)));
  for (int i = 0; i < n_s; ++i) {
    const double s = s_max * i / (n_s - 1);
    for (int j = 0; j < n_u; ++j) {
      const double u = u_max * j / (n_u - 1);
      std::vector<cplx> row;
      row.reserve(xi.size());
      if (j == 0) {
        for (double q : xi) row.push_back(boundary_char(s, q));
      } else {
        const ScalarSymbol k = (s == 0.0) ? ScalarSymbol::psi0() : ScalarSymbol::psi(s);
        const double t = 1.0 / u;
        const LatticeDistribution dist = distribution(k, t);
        for (double q : xi) row.push_back(empirical_char(k, t, q, &dist));
      }
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(row);
    }
  }

  double gap = 0.0;
  for (int i = 0; i < n_s; ++i)
    for (int j = 0; j < n_u; ++j)
      for (std::size_t q = 0; q < xi.size(); ++q) {
        const cplx v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][q];
        if (i + 1 < n_s)
          gap = std::max(gap,
                         std::abs(v - table[static_cast<std::size_t>(i + 1)]
                                           [static_cast<std::size_t>(j)][q]));
        if (j + 1 < n_u)
          gap = std::max(gap, std::abs(v - table[static_cast<std::size_t>(i)]
                                                [static_cast<std::size_t>(j + 1)][q]));
      }
  rep.max_neighbor_gap = gap;
  return rep;
}

}  // namespace qwalk
