#include "qwalk/dense.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<cplx> DenseMatrix::apply(const std::vector<cplx>& v) const {
  std::vector<cplx> w(static_cast<std::size_t>(n_), cplx(0.0, 0.0));
  for (int i = 0; i < n_; ++i) {
    cplx acc(0.0, 0.0);
    const cplx* row = &a_[static_cast<std::size_t>(i) * n_];
    for (int j = 0; j < n_; ++j) acc += row[j] * v[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = acc;
  }
  return w;
}

double DenseMatrix::inf_norm() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

double DenseMatrix::max_hermitian_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

namespace {

// Householder reduction of a Hermitian matrix to tridiagonal form. Only the
// diagonal d and the off-diagonal magnitudes e are produced; the complex
// phases on the off-diagonal are removed by a diagonal unitary and do not
// affect the spectrum.
void tridiagonalize(DenseMatrix a, std::vector<double>& d, std::vector<double>& e) {
  const int n = a.size();
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);

  std::vector<cplx> w(static_cast<std::size_t>(n));
  std::vector<cplx> p(static_cast<std::size_t>(n));
  for (int k = 0; k + 2 < n; ++k) {
    double sigma2 = 0.0;
    for (int i = k + 1; i < n; ++i) sigma2 += std::norm(a(i, k));
    const double sigma = std::sqrt(sigma2);
    if (sigma < 1e-300) {
      e[static_cast<std::size_t>(k + 1)] = 0.0;
      continue;
    }
    const cplx lead = a(k + 1, k);
    const cplx phase = (lead == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : lead / std::abs(lead);

    // w = x + phase*sigma*e1 annihilates the column below entry k+1
    for (int i = k + 1; i < n; ++i) w[static_cast<std::size_t>(i)] = a(i, k);
    w[static_cast<std::size_t>(k + 1)] += phase * sigma;
    const double wnorm2 = 2.0 * sigma * (sigma + std::abs(lead));
    const double beta = 2.0 / wnorm2;

    // rank-2 update of the trailing block: A <- A - w q* - q w*
    for (int i = k + 1; i < n; ++i) {
      cplx acc(0.0, 0.0);
      for (int j = k + 1; j < n; ++j) acc += a(i, j) * w[static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)] = acc * beta;
    }
    cplx kappa(0.0, 0.0);
    for (int i = k + 1; i < n; ++i)
      kappa += std::conj(w[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(i)];
    kappa *= 0.5 * beta;
    for (int i = k + 1; i < n; ++i)
      p[static_cast<std::size_t>(i)] -= kappa * w[static_cast<std::size_t>(i)];
    for (int i = k + 1; i < n; ++i) {
      const cplx wi = w[static_cast<std::size_t>(i)];
      const cplx qi = p[static_cast<std::size_t>(i)];
      for (int j = k + 1; j < n; ++j) {
        a(i, j) -= wi * std::conj(p[static_cast<std::size_t>(j)]) +
                   qi * std::conj(w[static_cast<std::size_t>(j)]);
      }
    }
    e[static_cast<std::size_t>(k + 1)] = sigma;  // |A(k+1,k)| after the reflection
  }
  if (n >= 2) e[static_cast<std::size_t>(n - 1)] = std::abs(a(n - 1, n - 2));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a(i, i).real();
}

// Implicit-shift QL on a symmetric tridiagonal matrix (eigenvalues only).
// d: diagonal; e: subdiagonal with e[0] unused.
void tqli(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  // shift e down so e[i] couples d[i] and d[i+1]
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[static_cast<std::size_t>(m)]) +
                          std::abs(d[static_cast<std::size_t>(m + 1)]);
        if (std::abs(e[static_cast<std::size_t>(m)]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw Error("EigenFailure", "tridiagonal QL did not converge");
        double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                   (2.0 * e[static_cast<std::size_t>(l)]);
        double r = std::hypot(g, 1.0);
        g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
            e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, pshift = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[static_cast<std::size_t>(i)];
          const double b = c * e[static_cast<std::size_t>(i)];
          r = std::hypot(f, g);
          e[static_cast<std::size_t>(i + 1)] = r;
          if (r == 0.0) {
            d[static_cast<std::size_t>(i + 1)] -= pshift;
            e[static_cast<std::size_t>(m)] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[static_cast<std::size_t>(i + 1)] - pshift;
          r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
          pshift = s * r;
          d[static_cast<std::size_t>(i + 1)] = g + pshift;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[static_cast<std::size_t>(l)] -= pshift;
        e[static_cast<std::size_t>(l)] = g;
        e[static_cast<std::size_t>(m)] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
  std::vector<double> d, e;
  tridiagonalize(a, d, e);
  tqli(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<cplx> exp_i_apply(const DenseMatrix& a, std::vector<cplx> v, double t) {
  if (t == 0.0) return v;
  const double scale = std::abs(t) * a.inf_norm();
  const int substeps = std::max(1, static_cast<int>(std::ceil(scale)));
  const double dt = t / static_cast<double>(substeps);

  for (int step = 0; step < substeps; ++step) {
    std::vector<cplx> term = v;
    std::vector<cplx> acc = v;
    double acc_norm = 0.0;
    for (const cplx& z : acc) acc_norm += std::norm(z);
    acc_norm = std::sqrt(acc_norm);
    for (int k = 1; k <= 200; ++k) {
      term = a.apply(term);
      const cplx factor = cplx(0.0, dt) / static_cast<double>(k);
      double term_norm = 0.0;
      for (cplx& z : term) {
        z *= factor;
        term_norm += std::norm(z);
      }
      term_norm = std::sqrt(term_norm);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      if (term_norm <= 1e-17 * std::max(acc_norm, 1e-300)) break;
    }
    v = std::move(acc);
  }
  return v;
}

}  // namespace qwalk
