#include "qwalk/momentum.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/fft.hpp"

namespace qwalk {

MomentumGrid::MomentumGrid(int M) : size(M) {
  if (!is_power_of_two(M) || M < 8)
    throw DomainError("momentum grid size must be a power of two >= 8, got " +
                      std::to_string(M));
}

double MomentumSymbol::max_unitary_defect() const {
  double worst = 0.0;
  for (const Mat2& v : values)
    worst = std::max(worst, (v.adjoint() * v - Mat2::identity()).opnorm());
  return worst;
}

double MomentumSymbol::max_hermitian_defect() const {
  double worst = 0.0;
  for (const Mat2& v : values) worst = std::max(worst, (v - v.adjoint()).opnorm());
  return worst;
}

double MomentumSymbol::max_abs_trace() const {
  double worst = 0.0;
  for (const Mat2& v : values) worst = std::max(worst, std::abs(v.trace()));
  return worst;
}

double MomentumSymbol::max_abs_det_minus_one() const {
  double worst = 0.0;
  for (const Mat2& v : values) worst = std::max(worst, std::abs(v.det() - cplx(1.0, 0.0)));
  return worst;
}

Mat2 coin_symbol_at(const CoinParameters& coin, double theta) {
  const cplx z(std::cos(theta), std::sin(theta));
  const cplx az = coin.alpha * z;
  const cplx bz = coin.beta * std::conj(z);
  return Mat2::diag(az, std::conj(az)) * coin.s +
         Mat2::offdiag(bz, -std::conj(bz)) * coin.r;
}

MomentumSymbol coin_symbol(const CoinParameters& coin, const MomentumGrid& grid) {
  MomentumSymbol sym{grid, {}};
  sym.values.reserve(grid.size);
  for (int j = 0; j < grid.size; ++j) sym.values.push_back(coin_symbol_at(coin, grid.node(j)));
  return sym;
}

Mat2 generator_symbol_at(const CoinParameters& coin, double theta) {
  const double shifted = theta + coin.mu;
  const double phi = eval_phi(coin.s, shifted);
  const double g = phi / std::sin(phi);
  const double p = coin.s * std::sin(shifted);
  const cplx e(std::cos(theta), std::sin(theta));
  const cplx q = cplx(0.0, -coin.r) * coin.beta * std::conj(e);
  // Hermitian and traceless by construction
  return Mat2(g * p, g * q, g * std::conj(q), -g * p);
}

MomentumSymbol generator_symbol(const CoinParameters& coin, const MomentumGrid& grid) {
  MomentumSymbol sym{grid, {}};
  sym.values.reserve(grid.size);
  for (int j = 0; j < grid.size; ++j)
    sym.values.push_back(generator_symbol_at(coin, grid.node(j)));
  return sym;
}

Diagonalization diagonalize_generator(const CoinParameters& coin, double theta) {
  const double shifted = theta + coin.mu;
  const double phi = eval_phi(coin.s, shifted);
  const double sinphi = std::sin(phi);
  const double p = coin.s * std::sin(shifted);
  const cplx e(std::cos(theta), std::sin(theta));
  const cplx top = cplx(0.0, coin.r) * coin.beta * std::conj(e);

  Diagonalization d;
  d.basis = Mat2(top, top, p - sinphi, p + sinphi);
  d.eig_plus = phi;
  d.eig_minus = -phi;
  if (std::abs(d.basis.det()) < 1e-14)
    throw SingularDiagonalizerError("diagonalizer determinant vanished");
  return d;
}

Mat2 exp_generator_at(const CoinParameters& coin, double theta, double t) {
  const Diagonalization d = diagonalize_generator(coin, theta);
  const cplx ep(std::cos(t * d.eig_plus), std::sin(t * d.eig_plus));
  const cplx em(std::cos(t * d.eig_minus), std::sin(t * d.eig_minus));
  return d.basis * Mat2::diag(ep, em) * d.basis.inverse();
}

MomentumSymbol exp_generator_symbol(const CoinParameters& coin, const MomentumGrid& grid,
                                    double t) {
  MomentumSymbol sym{grid, {}};
  sym.values.reserve(grid.size);
  for (int j = 0; j < grid.size; ++j)
    sym.values.push_back(exp_generator_at(coin, grid.node(j), t));
  return sym;
}

bool SpectrumIntervals::contains(double lambda, double slack) const {
  return (lambda >= neg_lo - slack && lambda <= neg_hi + slack) ||
         (lambda >= pos_lo - slack && lambda <= pos_hi + slack);
}

SpectrumIntervals spectrum_intervals(const CoinParameters& coin) {
  const double lo = std::acos(coin.s);
  const double hi = std::acos(-coin.s);
  return {-hi, -lo, lo, hi};
}

namespace {

// One analysis pass: coefficients on a fixed grid plus the largest
// out-of-band coefficient magnitude (everything beyond x_max is available
// from the same transform, so aliasing is measured rather than guessed).
struct ScalarPass {
  std::vector<cplx> coeff;
  double out_band_max;
};

ScalarPass scalar_pass(const std::function<cplx(double)>& k, int x_max, int M) {
  std::vector<cplx> samples(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) samples[j] = k(kTwoPi * j / M);
  fft_forward(samples);
  ScalarPass pass;
  pass.coeff.resize(static_cast<std::size_t>(2 * x_max + 1));
  const double inv = 1.0 / static_cast<double>(M);
  for (int x = -x_max; x <= x_max; ++x) {
    const int idx = (x % M + M) % M;
    pass.coeff[static_cast<std::size_t>(x + x_max)] = samples[idx] * inv;
  }
  double out = 0.0;
  for (int x = x_max + 1; x <= M / 2; ++x) {
    out = std::max(out, std::abs(samples[static_cast<std::size_t>(x)]) * inv);
    const int neg = M - x;
    if (neg > x_max) out = std::max(out, std::abs(samples[static_cast<std::size_t>(neg)]) * inv);
  }
  pass.out_band_max = out;
  return pass;
}

double table_gap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace

CoefficientTable fourier_coefficients(const std::function<cplx(double)>& k, int x_max,
                                      double tol, int initial_grid, int grid_cap) {
  if (x_max < 0) throw DomainError("x_max must be nonnegative");
  if (tol <= 0.0) throw DomainError("tolerance must be positive");
  int M = std::max(initial_grid, next_power_of_two(4 * std::max(x_max, 2)));
  if (!is_power_of_two(M)) M = next_power_of_two(M);

  ScalarPass coarse = scalar_pass(k, x_max, M);
  while (true) {
    if (2 * M > grid_cap)
      throw ResolutionTooLowError("Fourier coefficients did not stabilize below the grid cap " +
                                  std::to_string(grid_cap));
    ScalarPass fine = scalar_pass(k, x_max, 2 * M);
    const double gap = table_gap(coarse.coeff, fine.coeff);
    if (gap < tol) {
      CoefficientTable table;
      table.x_max = x_max;
      table.coeff = std::move(fine.coeff);
      table.grid_size = 2 * M;
      table.aliasing_bound = gap + fine.out_band_max;
      return table;
    }
    coarse = std::move(fine);
    M *= 2;
  }
}

CoefficientTable fourier_coefficients(const ScalarSymbol& k, int x_max, double tol) {
  return fourier_coefficients([&k](double th) { return cplx(k(th), 0.0); }, x_max, tol);
}

MatrixCoefficientTable matrix_fourier_coefficients(const std::function<Mat2(double)>& sym,
                                                   int x_max, double tol, int initial_grid,
                                                   int grid_cap) {
  MatrixCoefficientTable table;
  table.x_max = x_max;
  table.coeff.assign(static_cast<std::size_t>(2 * x_max + 1), Mat2::zero());
  table.aliasing_bound = 0.0;
  table.grid_size = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto entry = [&sym, i, j](double th) { return sym(th)(i, j); };
      CoefficientTable t = fourier_coefficients(entry, x_max, tol, initial_grid, grid_cap);
      for (int x = -x_max; x <= x_max; ++x)
        table.coeff[static_cast<std::size_t>(x + x_max)](i, j) = t.at(x);
      table.aliasing_bound = std::max(table.aliasing_bound, t.aliasing_bound);
      table.grid_size = std::max(table.grid_size, t.grid_size);
    }
  }
  return table;
}

SpinorState apply_symbol_multiplier(const std::function<Mat2(double)>& symbol,
                                    const SpinorState& f, const MomentumGrid& grid,
                                    int out_radius) {
  const int M = grid.size;
  const int N = f.radius();
  if (M < 2 * (N + out_radius + 2))
    throw ResolutionTooLowError("momentum grid too small for window: M = " + std::to_string(M));

  // synthesis (F*): values sum_x f(x) e^{i x theta_j}, one inverse DFT per fiber
  std::vector<cplx> up(static_cast<std::size_t>(M), cplx(0.0, 0.0));
  std::vector<cplx> dn(static_cast<std::size_t>(M), cplx(0.0, 0.0));
  for (int x = -N; x <= N; ++x) {
    const int idx = (x % M + M) % M;
    up[static_cast<std::size_t>(idx)] += f.at(x, 0);
    dn[static_cast<std::size_t>(idx)] += f.at(x, 1);
  }
  fft_inverse(up);
  fft_inverse(dn);

  // nodewise multiplication
  for (int j = 0; j < M; ++j) {
    const Vec2 v = symbol(grid.node(j)) * Vec2(up[static_cast<std::size_t>(j)],
                                               dn[static_cast<std::size_t>(j)]);
    up[static_cast<std::size_t>(j)] = v.up;
    dn[static_cast<std::size_t>(j)] = v.dn;
  }

  // analysis (F): coefficients (1/M) sum_j e^{-i x theta_j} v(theta_j)
  fft_forward(up);
  fft_forward(dn);
  SpinorState g(out_radius);
  const double inv = 1.0 / static_cast<double>(M);
  for (int x = -out_radius; x <= out_radius; ++x) {
    const int idx = (x % M + M) % M;
    g.at(x, 0) = up[static_cast<std::size_t>(idx)] * inv;
    g.at(x, 1) = dn[static_cast<std::size_t>(idx)] * inv;
  }
  return g;
}

}  // namespace qwalk
