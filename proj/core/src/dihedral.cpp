#include "qwalk/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

DihedralElement dihedral_mul(const DihedralElement& g, const DihedralElement& h) {
  return {g.x + g.mu * h.x, g.mu * h.mu};
}

DihedralElement dihedral_inv(const DihedralElement& g) { return {-g.mu * g.x, g.mu}; }

GroupFunction GroupFunction::delta(const DihedralElement& g) {
  GroupFunction f;
  f.coef_[g] = cplx(1.0, 0.0);
  return f;
}

cplx GroupFunction::at(const DihedralElement& g) const {
  const auto it = coef_.find(g);
  return it == coef_.end() ? cplx(0.0, 0.0) : it->second;
}

void GroupFunction::set(const DihedralElement& g, cplx v) {
  if (v == cplx(0.0, 0.0))
    coef_.erase(g);
  else
    coef_[g] = v;
}

double GroupFunction::norm() const {
  double acc = 0.0;
  for (const auto& [g, v] : coef_) acc += std::norm(v);
  return std::sqrt(acc);
}

GroupFunction regular_rep_apply(const DihedralElement& g, const GroupFunction& f) {
  // (R(g) f)(h) = f(h g): the mass at k moves to k g^{-1}
  GroupFunction out;
  const DihedralElement ginv = dihedral_inv(g);
  for (const auto& [k, v] : f.terms()) out.set(dihedral_mul(k, ginv), v);
  return out;
}

Mat2 v_matrix(cplx alpha) { return Mat2::diag(alpha, std::conj(alpha)); }
Mat2 w_matrix(cplx beta) { return Mat2::offdiag(beta, -std::conj(beta)); }

RelationReport check_qw_relations(const Mat2& v, const Mat2& w) {
  RelationReport rep;
  rep.qw1 = (w * w + Mat2::identity()).opnorm();
  rep.qw2 = (v * w - w * v.adjoint()).opnorm();
  return rep;
}

RelationReport check_qw_relations_lattice(cplx alpha, cplx beta, int window_radius) {
  if (window_radius < 3) throw DomainError("relation check needs window radius >= 3");
  const Mat2 vc = v_matrix(alpha);
  const Mat2 wc = w_matrix(beta);
  RelationReport rep;
  for (int x = -(window_radius - 2); x <= window_radius - 2; ++x) {
    for (int c = 0; c < 2; ++c) {
      const SpinorState e = SpinorState::delta(window_radius, x, c);
      // (QW1): W^2 + I
      const SpinorState w2 = walk_step(wc, walk_step(wc, e));
      rep.qw1 = std::max(rep.qw1, (w2 + e).norm());
      // (QW2): V W - W V^{-1}
      const SpinorState lhs = walk_step(vc, walk_step(wc, e));
      const SpinorState rhs = walk_step(wc, walk_step_adjoint(vc, e));
      rep.qw2 = std::max(rep.qw2, (lhs - rhs).norm());
    }
  }
  return rep;
}

namespace {

// U^n versus T_n(x) + (i y + w) U_{n-1}(x) on one vector, with all operator
// polynomials evaluated by the three-term recurrences applied to states
// (T_{k+1} = 2x T_k - T_{k-1}, likewise for U; U_{-1} = 0).
template <typename State, typename OpU, typename OpX, typename OpW>
double chebyshev_residual(const OpU& apply_u, const OpX& apply_x, const OpW& apply_iy_plus_w,
                          const State& v, int n) {
  State lhs = v;
  for (int k = 0; k < n; ++k) lhs = apply_u(lhs);

  State rhs = v;  // n = 0: T_0 = 1, U_{-1} = 0
  if (n > 0) {
    State t_prev = v;           // T_0(x) v
    State t_cur = apply_x(v);   // T_1(x) v
    for (int k = 2; k <= n; ++k) {
      State t_next = apply_x(t_cur) * cplx(2.0, 0.0) - t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
    State u_prev = v;                           // U_0(x) v
    State u_cur = apply_x(v) * cplx(2.0, 0.0);  // U_1(x) v
    for (int k = 2; k <= n - 1; ++k) {
      State u_next = apply_x(u_cur) * cplx(2.0, 0.0) - u_prev;
      u_prev = std::move(u_cur);
      u_cur = std::move(u_next);
    }
    const State& u_nm1 = (n == 1) ? u_prev : u_cur;
    rhs = t_cur + apply_iy_plus_w(u_nm1);
  }
  return (lhs - rhs).norm();
}

}  // namespace

double chebyshev_power(const Mat2& v, const Mat2& w, double s, double r, int n) {
  if (n < 0) throw DomainError("chebyshev power needs n >= 0");
  const Mat2 vadj = v.adjoint();
  const Mat2 u = v * s + w * r;
  const Mat2 x = (vadj + v) * (0.5 * s);
  const Mat2 iy_plus_w = (v - vadj) * (0.5 * s) + w * r;

  auto apply_u = [&u](const Vec2& q) { return u * q; };
  auto apply_x = [&x](const Vec2& q) { return x * q; };
  auto apply_iyw = [&iy_plus_w](const Vec2& q) { return iy_plus_w * q; };

  double worst = 0.0;
  const Vec2 basis[2] = {Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
  for (const Vec2& e : basis)
    worst = std::max(worst, chebyshev_residual(apply_u, apply_x, apply_iyw, e, n));
  return worst;
}

double chebyshev_power_lattice(cplx alpha, cplx beta, double s, double r, int n,
                               int basis_radius) {
  if (n < 0) throw DomainError("chebyshev power needs n >= 0");
  const Mat2 vc = v_matrix(alpha);
  const Mat2 wc = w_matrix(beta);
  const int window = basis_radius + n + 2;

  auto apply_u = [&](const SpinorState& f) {
    return walk_step(vc, f) * cplx(s, 0.0) + walk_step(wc, f) * cplx(r, 0.0);
  };
  auto apply_x = [&](const SpinorState& f) {
    return (walk_step_adjoint(vc, f) + walk_step(vc, f)) * cplx(0.5 * s, 0.0);
  };
  auto apply_iyw = [&](const SpinorState& f) {
    return (walk_step(vc, f) - walk_step_adjoint(vc, f)) * cplx(0.5 * s, 0.0) +
           walk_step(wc, f) * cplx(r, 0.0);
  };

  double worst = 0.0;
  for (int x = -basis_radius; x <= basis_radius; ++x) {
    for (int c = 0; c < 2; ++c) {
      const SpinorState e = SpinorState::delta(window, x, c);
      worst = std::max(worst, chebyshev_residual(apply_u, apply_x, apply_iyw, e, n));
    }
  }
  return worst;
}

SpinorState intertwiner(const GroupFunction& f, const CoinParameters& coin,
                        int window_radius) {
  SpinorState out(window_radius);
  for (const auto& [g, v] : f.terms()) {
    // alpha^{-x} by repeated multiplication
    cplx apow(1.0, 0.0);
    const cplx step = (g.x >= 0) ? std::conj(coin.alpha) : coin.alpha;
    for (int k = 0; k < std::abs(g.x); ++k) apow *= step;
    if (g.mu == 1) {
      const int site = -g.x;
      if (!out.in_window(site)) throw WindowOverflowError("intertwiner image leaves window");
      out.at(site, 0) += v * apow;
    } else {
      const int site = 1 - g.x;
      if (!out.in_window(site)) throw WindowOverflowError("intertwiner image leaves window");
      out.at(site, 1) += v * apow * cplx(0.0, 1.0) / coin.beta;
    }
  }
  return out;
}

double verify_equivalence(const CoinParameters& coin, int basis_radius) {
  const int window = basis_radius + 2;
  const Mat2 vc = v_matrix(coin.alpha);
  const Mat2 wc = w_matrix(coin.beta);
  const DihedralElement gens[2] = {dihedral_a(), dihedral_b()};

  double worst = 0.0;
  for (int x = -basis_radius; x <= basis_radius; ++x) {
    for (int mu : {1, -1}) {
      const GroupFunction d = GroupFunction::delta({x, mu});
      const SpinorState image = intertwiner(d, coin, window);
      for (const DihedralElement& g : gens) {
        SpinorState lhs = (g.mu == 1)
                              ? walk_step(vc, image)
                              : walk_step(wc, image) * cplx(0.0, -1.0);  // rho(b) = -iW
        const SpinorState rhs = intertwiner(regular_rep_apply(g, d), coin, window);
        worst = std::max(worst, (lhs - rhs).norm());
      }
    }
  }
  return worst;
}

}  // namespace qwalk
