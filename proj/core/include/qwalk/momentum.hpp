#pragma once

#include <functional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// Uniform grid theta_j = 2*pi*j/M on [0, 2*pi). M must be a power of two,
// at least 8, so the transform pair is a plain radix-2 FFT.
struct MomentumGrid {
  int size;

  explicit MomentumGrid(int M);
  double node(int j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(size); }
};

// A sampled map theta -> 2x2 complex matrix.
struct MomentumSymbol {
  MomentumGrid grid;
  std::vector<Mat2> values;

  double max_unitary_defect() const;    // max_j ||T_j* T_j - I||
  double max_hermitian_defect() const;  // max_j ||T_j - T_j*||
  double max_abs_trace() const;
  double max_abs_det_minus_one() const;
};

// T(e^{i theta}) = s V(alpha e^{i theta}) + r W(beta e^{-i theta}):
// the multiplication symbol of U(T) under F* U(T) F.
Mat2 coin_symbol_at(const CoinParameters& coin, double theta);
MomentumSymbol coin_symbol(const CoinParameters& coin, const MomentumGrid& grid);

// L(theta) = (phi_s/sin phi_s)(theta+mu) *
//            [[ s sin(theta+mu), -i r beta e^{-i theta} ],
//             [ i r conj(beta) e^{i theta}, -s sin(theta+mu) ]]
// Hermitian, traceless, eigenvalues +-phi_s(theta+mu).
Mat2 generator_symbol_at(const CoinParameters& coin, double theta);
MomentumSymbol generator_symbol(const CoinParameters& coin, const MomentumGrid& grid);

// Columns of basis are eigenvectors of L(theta) for +phi and -phi
// (in that order); basis is never singular for 0 < s < 1 since
// |det B| = 2 r sin(phi_s) >= 2 r^2 > 0.
struct Diagonalization {
  Mat2 basis;
  double eig_plus;
  double eig_minus;
};
Diagonalization diagonalize_generator(const CoinParameters& coin, double theta);

// e^{i t L(theta)} through the closed-form diagonalization. At t = 1 this
// equals coin_symbol_at to roundoff.
Mat2 exp_generator_at(const CoinParameters& coin, double theta, double t);
MomentumSymbol exp_generator_symbol(const CoinParameters& coin, const MomentumGrid& grid,
                                    double t);

// Spec(D(T)) = [-arccos(-s), -arccos(s)] u [arccos(s), arccos(-s)].
struct SpectrumIntervals {
  double neg_lo, neg_hi;  // [-arccos(-s), -arccos(s)]
  double pos_lo, pos_hi;  // [arccos(s), arccos(-s)]

  bool contains(double lambda, double slack = 0.0) const;
};
SpectrumIntervals spectrum_intervals(const CoinParameters& coin);

// Fourier coefficients F(k)(x) = (1/2pi) int e^{-ix theta} k(theta) dtheta,
// |x| <= x_max, computed as (1/M) sum_j e^{-ix theta_j} k(theta_j). The grid
// doubles until two successive tables agree within tol (spectral accuracy
// for analytic integrands); ResolutionTooLow if the cap is hit first.
// aliasing_bound adds the largest coefficient magnitude beyond x_max on the
// final grid to the doubling gap.
struct CoefficientTable {
  int x_max = 0;
  std::vector<cplx> coeff;  // index x + x_max
  double aliasing_bound = 0.0;
  int grid_size = 0;

  cplx at(int x) const {
    if (x < -x_max || x > x_max) return cplx(0.0, 0.0);
    return coeff[static_cast<std::size_t>(x + x_max)];
  }
};

CoefficientTable fourier_coefficients(const std::function<cplx(double)>& k, int x_max,
                                      double tol, int initial_grid = 1024,
                                      int grid_cap = 1 << 16);
CoefficientTable fourier_coefficients(const ScalarSymbol& k, int x_max, double tol);

struct MatrixCoefficientTable {
  int x_max = 0;
  std::vector<Mat2> coeff;
  double aliasing_bound = 0.0;
  int grid_size = 0;

  Mat2 at(int x) const {
    if (x < -x_max || x > x_max) return Mat2::zero();
    return coeff[static_cast<std::size_t>(x + x_max)];
  }
};
MatrixCoefficientTable matrix_fourier_coefficients(const std::function<Mat2(double)>& sym,
                                                   int x_max, double tol,
                                                   int initial_grid = 1024,
                                                   int grid_cap = 1 << 16);

// F . (multiply by symbol) . F* applied to a spinor state, evaluated on the
// given grid; exact (up to roundoff) whenever the product of symbol and
// synthesized trigonometric polynomial is band-limited below M/2.
SpinorState apply_symbol_multiplier(const std::function<Mat2(double)>& symbol,
                                    const SpinorState& f, const MomentumGrid& grid,
                                    int out_radius);

}  // namespace qwalk
