#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/dense.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/momentum.hpp"

namespace qwalk {

// I(x) = (1/2pi) int e^{-ix theta} sin(theta) phi_s(theta)/sin(phi_s(theta)) dtheta
// J(x) = (1/2pi) int e^{-ix theta}            phi_s(theta)/sin(phi_s(theta)) dtheta
// J is real and even in x, I is purely imaginary and odd (I(0) = 0).
struct IJTables {
  int x_max = 0;
  std::vector<cplx> i_table;  // index x + x_max
  std::vector<cplx> j_table;
  double quadrature_bound = 0.0;

  cplx I(int x) const {
    if (x < -x_max || x > x_max) return cplx(0.0, 0.0);
    return i_table[static_cast<std::size_t>(x + x_max)];
  }
  cplx J(int x) const {
    if (x < -x_max || x > x_max) return cplx(0.0, 0.0);
    return j_table[static_cast<std::size_t>(x + x_max)];
  }
};

// s = 0 is allowed (constant integrand, useful for tests); the walk use-case
// has 0 < s < 1.
IJTables compute_ij(double s, int x_max, double tol);

struct DecayFit {
  double rate = 0.0;       // fitted c in ||D(x)|| ~ C exp(-c|x|)
  double log_prefactor = 0.0;
  int points = 0;
};

// Least-squares fit of log||D(x)|| against |x| over the range where entries
// sit above the roundoff floor.
DecayFit fit_exponential_decay(const std::vector<double>& norms_by_abs_offset);

// The kernel D_T(x) of Eq-style entries
//   [[ s a^x I(x),                -i r a^{x+1} b J(x+1) ],
//    [ i r a^{x-1} conj(b) J(x-1), -s a^x I(x)           ]]
// (a = alpha, b = beta). Powers of alpha are built by repeated
// multiplication, never as exp(i x mu).
struct HamiltonianKernel {
  CoinParameters coin;
  MatrixKernel kernel;   // radius K; kernel.tail_bound is certified
  IJTables tables;       // |x| <= K + 1
  DecayFit decay;
  double tail_bound = 0.0;
};

// Throws TailNotConverged when the fitted decay cannot certify tol at the
// requested radius; propagates ResolutionTooLow from the quadrature layer.
HamiltonianKernel build_kernel(const CoinParameters& coin, int radius, double tol);

struct KernelInvariantReport {
  double j_imag_max = 0.0;        // max |Im J(x)|
  double j_even_defect = 0.0;     // max |J(x) - J(-x)|
  double i_real_max = 0.0;        // max |Re I(x)|
  double i_odd_defect = 0.0;      // max |I(x) + I(-x)|
  double self_adjoint_defect = 0.0;
  double trace_max = 0.0;
  double decay_rate = 0.0;
};
KernelInvariantReport check_kernel_invariants(const HamiltonianKernel& h);

// || F e^{iL} F* f - U(T) f ||  (momentum route of U(T) = e^{iD(T)}).
double verify_exponential(const CoinParameters& coin, const SpinorState& f,
                          const MomentumGrid& grid);

// Position route: exponentiate the truncated kernel compressed to a window
// of 2*window_radius+1 sites and compare with one walk step on delta_0 e1.
// Doubly truncated, so the tolerance is looser than the momentum route.
double verify_exponential_position(const CoinParameters& coin, int window_radius,
                                   int kernel_radius, double tol);

// max_{|x| <= K} || (D_T * D_T)(x) - alpha^x F(phi_s^2)(x) I ||  using a
// kernel of radius 2K so the convolution is exact up to the certified tail.
double verify_square_identity(const CoinParameters& coin, int half_radius, double tol);

// || D(T)(delta_x e1) (x + offset) || for |offset| <= radius.
std::vector<double> locality_profile(const HamiltonianKernel& h, int site, int radius);

// Entrywise gap between the built kernel and the matrix Fourier
// coefficients of L(theta); numerically realizes D(T) = F L F*.
double kernel_vs_symbol_gap(const HamiltonianKernel& h, double tol);

// sup_theta || sum_{|y|<=K} D(y) e^{iy theta} || over the grid; equals
// arccos(-s) up to the kernel tail.
double truncated_symbol_norm(const HamiltonianKernel& h, const MomentumGrid& grid);

// Dense compression P_N D_K P_N, size 2(2N+1), site-major with the fiber
// fastest.
DenseMatrix dense_window_matrix(const HamiltonianKernel& h, int window_radius);

}  // namespace qwalk
