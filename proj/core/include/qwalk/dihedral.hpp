#pragma once

#include <map>

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// Element (x, mu) of Z x {+-1} with (x, mu)(y, nu) = (x + mu y, mu nu);
// the infinite dihedral group, generated by a = (1, 1), b = (0, -1).
struct DihedralElement {
  int x = 0;
  int mu = 1;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement dihedral_mul(const DihedralElement& g, const DihedralElement& h);
DihedralElement dihedral_inv(const DihedralElement& g);
inline DihedralElement dihedral_identity() { return {0, 1}; }
inline DihedralElement dihedral_a() { return {1, 1}; }
inline DihedralElement dihedral_b() { return {0, -1}; }

// Finitely supported function on the group, sparse storage.
class GroupFunction {
 public:
  static GroupFunction delta(const DihedralElement& g);

  cplx at(const DihedralElement& g) const;
  void set(const DihedralElement& g, cplx v);
  double norm() const;
  const std::map<DihedralElement, cplx>& terms() const { return coef_; }

 private:
  std::map<DihedralElement, cplx> coef_;
};

// Right regular representation (R(g) f)(h) = f(h g); a homomorphism,
// R(g1 g2) = R(g1) R(g2).
GroupFunction regular_rep_apply(const DihedralElement& g, const GroupFunction& f);

// V(alpha) = diag(alpha, conj(alpha)); W(beta) = [[0, beta], [-conj(beta), 0]].
Mat2 v_matrix(cplx alpha);
Mat2 w_matrix(cplx beta);

// Residuals of (QW1) W^2 = -I and (QW2) V W = W V^{-1}.
struct RelationReport {
  double qw1 = 0.0;
  double qw2 = 0.0;
};
RelationReport check_qw_relations(const Mat2& v, const Mat2& w);
// Lattice realization V = U(V(alpha)), W = U(W(beta)); residuals are taken
// over the basis vectors delta_x e_i with |x| <= window_radius - 2.
RelationReport check_qw_relations_lattice(cplx alpha, cplx beta, int window_radius);

// max basis-vector residual of U^n = T_n(x) + (i y + w) U_{n-1}(x) with
// x = (s/2)(V* + V), y = (s/(2i))(V - V*), w = r W, evaluated through the
// three-term recurrences.
double chebyshev_power(const Mat2& v, const Mat2& w, double s, double r, int n);
double chebyshev_power_lattice(cplx alpha, cplx beta, double s, double r, int n,
                               int basis_radius);

// The unitary u: l^2(Gamma) -> l^2(Z, C^2),
//   u delta_(x, 1) = alpha^{-x} delta_{-x} e1
//   u delta_(x,-1) = i alpha^{-x} beta^{-1} delta_{1-x} e2.
SpinorState intertwiner(const GroupFunction& f, const CoinParameters& coin,
                        int window_radius);

// max over g in {a, b} and basis |x| <= basis_radius of
// || rho_QW(g) (u delta) - u (R(g) delta) ||, with rho_QW(a) = U(V(alpha)),
// rho_QW(b) = -i U(W(beta)).
double verify_equivalence(const CoinParameters& coin, int basis_radius);

}  // namespace qwalk
