#pragma once

#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

// Small dense complex matrix, row-major. Used for windowed compressions of
// lattice operators (verification paths only, never in the kernel pipeline).
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0)) {}

  int size() const { return n_; }
  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  double inf_norm() const;                // max row sum of |entries|
  double max_hermitian_defect() const;    // max |a_ij - conj(a_ji)|

 private:
  int n_;
  std::vector<cplx> a_;
};

// Eigenvalues of a Hermitian matrix, ascending. Householder reduction to
// (phase-equivalent real) tridiagonal form followed by implicit-shift QL.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a);

// e^{itA} v by a Taylor series with unit-norm substeps. Intended for
// self-adjoint A of modest norm (the walk Hamiltonians have norm <= pi).
std::vector<cplx> exp_i_apply(const DenseMatrix& a, std::vector<cplx> v, double t = 1.0);

}  // namespace qwalk
