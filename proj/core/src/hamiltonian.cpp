#include "qwalk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

IJTables compute_ij(double s, int x_max, double tol) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("compute_ij requires s in [0, 1)");
  if (tol <= 0.0) throw DomainError("compute_ij requires tol > 0");

  auto g = [s](double th) {
    const double phi = eval_phi(s, th);
    return phi / std::sin(phi);
  };
  CoefficientTable jt =
      fourier_coefficients([&g](double th) { return cplx(g(th), 0.0); }, x_max, tol);
  CoefficientTable it = fourier_coefficients(
      [&g](double th) { return cplx(std::sin(th) * g(th), 0.0); }, x_max, tol);

  IJTables out;
  out.x_max = x_max;
  out.i_table.resize(static_cast<std::size_t>(2 * x_max + 1));
  out.j_table.resize(static_cast<std::size_t>(2 * x_max + 1));
  for (int x = -x_max; x <= x_max; ++x) {
    out.i_table[static_cast<std::size_t>(x + x_max)] = it.at(x);
    out.j_table[static_cast<std::size_t>(x + x_max)] = jt.at(x);
  }
  out.quadrature_bound = std::max(it.aliasing_bound, jt.aliasing_bound);
  return out;
}

DecayFit fit_exponential_decay(const std::vector<double>& norms) {
  // fit over |x| >= 2 and above the roundoff floor
  double peak = 0.0;
  for (double v : norms) peak = std::max(peak, v);
  const double floor = std::max(1e-14 * peak, 1e-300);

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (std::size_t x = 2; x < norms.size(); ++x) {
    if (norms[x] <= floor) break;
    const double lx = static_cast<double>(x);
    const double ly = std::log(norms[x]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  DecayFit fit;
  fit.points = n;
  if (n < 4) return fit;  // rate stays 0: not enough range to certify
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  fit.rate = -slope;
  fit.log_prefactor = (sy - slope * sx) / n;
  return fit;
}

HamiltonianKernel build_kernel(const CoinParameters& coin, int radius, double tol) {
  if (radius < 2) throw DomainError("kernel radius must be at least 2");
  HamiltonianKernel h{coin, MatrixKernel::zero(radius), compute_ij(coin.s, radius + 1, tol),
                      DecayFit{}, 0.0};

  // alpha^x by repeated multiplication (stable for the windows used here)
  const int p_max = radius + 1;
  std::vector<cplx> alpha_pow(static_cast<std::size_t>(2 * p_max + 1));
  alpha_pow[static_cast<std::size_t>(p_max)] = cplx(1.0, 0.0);
  for (int x = 1; x <= p_max; ++x) {
    alpha_pow[static_cast<std::size_t>(p_max + x)] =
        alpha_pow[static_cast<std::size_t>(p_max + x - 1)] * coin.alpha;
    alpha_pow[static_cast<std::size_t>(p_max - x)] =
        alpha_pow[static_cast<std::size_t>(p_max - x + 1)] * std::conj(coin.alpha);
  }
  auto apow = [&alpha_pow, p_max](int x) {
    return alpha_pow[static_cast<std::size_t>(x + p_max)];
  };

  const cplx mi(0.0, -1.0), pi_(0.0, 1.0);
  for (int x = -radius; x <= radius; ++x) {
    const cplx diag = coin.s * apow(x) * h.tables.I(x);
    const cplx upper = mi * coin.r * apow(x + 1) * coin.beta * h.tables.J(x + 1);
    const cplx lower = pi_ * coin.r * apow(x - 1) * std::conj(coin.beta) * h.tables.J(x - 1);
    h.kernel.at(x) = Mat2(diag, upper, lower, -diag);
  }

  std::vector<double> norms(static_cast<std::size_t>(radius + 1), 0.0);
  for (int x = 0; x <= radius; ++x)
    norms[static_cast<std::size_t>(x)] =
        std::max(h.kernel.at(x).opnorm(), h.kernel.at(-x).opnorm());
  h.decay = fit_exponential_decay(norms);
  if (h.decay.rate <= 0.0)
    throw TailNotConvergedError("kernel norms show no certified exponential decay at radius " +
                                std::to_string(radius));

  const double c = h.decay.rate;
  const double prefactor = std::exp(h.decay.log_prefactor);
  const double tail =
      2.0 * prefactor * std::exp(-c * (radius + 1)) / (1.0 - std::exp(-c));
  h.tail_bound = std::max({tail, h.tables.quadrature_bound, 1e-15});
  h.kernel.tail_bound = h.tail_bound;
  if (h.tail_bound > tol)
    throw TailNotConvergedError("certified tail bound " + std::to_string(h.tail_bound) +
                                " exceeds requested tolerance at radius " +
                                std::to_string(radius));
  return h;
}

KernelInvariantReport check_kernel_invariants(const HamiltonianKernel& h) {
  KernelInvariantReport rep;
  const IJTables& t = h.tables;
  for (int x = -t.x_max; x <= t.x_max; ++x) {
    rep.j_imag_max = std::max(rep.j_imag_max, std::abs(t.J(x).imag()));
    rep.j_even_defect = std::max(rep.j_even_defect, std::abs(t.J(x) - t.J(-x)));
    rep.i_real_max = std::max(rep.i_real_max, std::abs(t.I(x).real()));
    rep.i_odd_defect = std::max(rep.i_odd_defect, std::abs(t.I(x) + t.I(-x)));
  }
  rep.self_adjoint_defect = h.kernel.self_adjoint_defect();
  for (int x = -h.kernel.radius; x <= h.kernel.radius; ++x)
    rep.trace_max = std::max(rep.trace_max, std::abs(h.kernel.at(x).trace()));
  rep.decay_rate = h.decay.rate;
  return rep;
}

double verify_exponential(const CoinParameters& coin, const SpinorState& f,
                          const MomentumGrid& grid) {
  const int out_radius = f.radius() + 1;
  const SpinorState via_momentum = apply_symbol_multiplier(
      [&coin](double th) { return exp_generator_at(coin, th, 1.0); }, f, grid, out_radius);
  const SpinorState via_walk = walk_step(coin, f.embedded(out_radius));
  return (via_momentum - via_walk).norm();
}

double verify_exponential_position(const CoinParameters& coin, int window_radius,
                                   int kernel_radius, double tol) {
  const HamiltonianKernel h = build_kernel(coin, kernel_radius, tol);
  const DenseMatrix a = dense_window_matrix(h, window_radius);

  const int n = 2 * (2 * window_radius + 1);
  std::vector<cplx> v(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  v[static_cast<std::size_t>(2 * window_radius)] = 1.0;  // delta_0 (x) e1
  v = exp_i_apply(a, std::move(v), 1.0);

  const SpinorState ref = walk_step(coin, SpinorState::delta(window_radius, 0, 0));
  double acc = 0.0;
  for (int x = -window_radius; x <= window_radius; ++x)
    for (int c = 0; c < 2; ++c) {
      const cplx got = v[static_cast<std::size_t>(2 * (x + window_radius) + c)];
      acc += std::norm(got - ref.at(x, c));
    }
  return std::sqrt(acc);
}

double verify_square_identity(const CoinParameters& coin, int half_radius, double tol) {
  const int full = 2 * half_radius;
  const HamiltonianKernel h = build_kernel(coin, full, tol);

  CoefficientTable phi_sq = fourier_coefficients(
      [&coin](double th) {
        const double p = eval_phi(coin.s, th);
        return cplx(p * p, 0.0);
      },
      half_radius, tol);

  std::vector<cplx> alpha_pow(static_cast<std::size_t>(2 * half_radius + 1));
  alpha_pow[static_cast<std::size_t>(half_radius)] = cplx(1.0, 0.0);
  for (int x = 1; x <= half_radius; ++x) {
    alpha_pow[static_cast<std::size_t>(half_radius + x)] =
        alpha_pow[static_cast<std::size_t>(half_radius + x - 1)] * coin.alpha;
    alpha_pow[static_cast<std::size_t>(half_radius - x)] =
        alpha_pow[static_cast<std::size_t>(half_radius - x + 1)] * std::conj(coin.alpha);
  }

  double worst = 0.0;
  for (int x = -half_radius; x <= half_radius; ++x) {
    Mat2 conv = Mat2::zero();
    const int y_lo = std::max(-full, x - full);
    const int y_hi = std::min(full, x + full);
    for (int y = y_lo; y <= y_hi; ++y) conv = conv + h.kernel.at(y) * h.kernel.at(x - y);
    const cplx scalar =
        alpha_pow[static_cast<std::size_t>(x + half_radius)] * phi_sq.at(x);
    worst = std::max(worst, (conv - Mat2::diag(scalar, scalar)).opnorm());
  }
  return worst;
}

std::vector<double> locality_profile(const HamiltonianKernel& h, int site, int radius) {
  std::vector<double> out(static_cast<std::size_t>(2 * radius + 1), 0.0);
  for (int off = -radius; off <= radius; ++off) {
    // (D delta_site e1)(site + off) = D_T(off) e1, first column
    const Mat2& k = h.kernel.at(off);
    (void)site;
    out[static_cast<std::size_t>(off + radius)] =
        std::sqrt(std::norm(k(0, 0)) + std::norm(k(1, 0)));
  }
  return out;
}

double kernel_vs_symbol_gap(const HamiltonianKernel& h, double tol) {
  const CoinParameters coin = h.coin;
  const MatrixCoefficientTable sym = matrix_fourier_coefficients(
      [&coin](double th) { return generator_symbol_at(coin, th); }, h.kernel.radius, tol);
  double worst = 0.0;
  for (int x = -h.kernel.radius; x <= h.kernel.radius; ++x)
    worst = std::max(worst, (h.kernel.at(x) - sym.at(x)).opnorm());
  return worst;
}

double truncated_symbol_norm(const HamiltonianKernel& h, const MomentumGrid& grid) {
  double worst = 0.0;
  for (int j = 0; j < grid.size; ++j) {
    const double th = grid.node(j);
    Mat2 acc = Mat2::zero();
    for (int y = -h.kernel.radius; y <= h.kernel.radius; ++y) {
      const double ang = y * th;
      acc = acc + h.kernel.at(y) * cplx(std::cos(ang), std::sin(ang));
    }
    worst = std::max(worst, acc.opnorm());
  }
  return worst;
}

DenseMatrix dense_window_matrix(const HamiltonianKernel& h, int window_radius) {
  const int sites = 2 * window_radius + 1;
  DenseMatrix a(2 * sites);
  for (int x = -window_radius; x <= window_radius; ++x) {
    for (int y = -window_radius; y <= window_radius; ++y) {
      const int off = x - y;
      if (off < -h.kernel.radius || off > h.kernel.radius) continue;
      const Mat2& k = h.kernel.at(off);
      const int bi = 2 * (x + window_radius);
      const int bj = 2 * (y + window_radius);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a(bi + i, bj + j) = k(i, j);
    }
  }
  return a;
}

}  // namespace qwalk
