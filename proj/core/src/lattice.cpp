#include "qwalk/lattice.hpp"

namespace qwalk {

SpinorState walk_step(const Mat2& coin, const SpinorState& f) {
  const int N = f.radius();
  if (f.at(N, 0) != cplx(0.0, 0.0))
    throw WindowOverflowError("walk_step: up-amplitude at site +" + std::to_string(N) +
                              " would leave the window");
  if (f.at(-N, 1) != cplx(0.0, 0.0))
    throw WindowOverflowError("walk_step: down-amplitude at site -" + std::to_string(N) +
                              " would leave the window");
  SpinorState g(N);
  for (int x = -N; x <= N; ++x) {
    const cplx u = f.in_window(x - 1) ? f.at(x - 1, 0) : cplx(0.0, 0.0);
    const cplx d = f.in_window(x + 1) ? f.at(x + 1, 1) : cplx(0.0, 0.0);
    const Vec2 v = coin * Vec2(u, d);
    g.at(x, 0) = v.up;
    g.at(x, 1) = v.dn;
  }
  return g;
}

SpinorState walk_step(const CoinParameters& coin, const SpinorState& f) {
  return walk_step(coin_matrix(coin), f);
}

SpinorState walk_step_adjoint(const Mat2& coin, const SpinorState& f) {
  const int N = f.radius();
  const Mat2 tadj = coin.adjoint();
  // apply T* sitewise first, then the shifts
  SpinorState h(N);
  for (int x = -N; x <= N; ++x) {
    const Vec2 v = tadj * Vec2(f.at(x, 0), f.at(x, 1));
    h.at(x, 0) = v.up;
    h.at(x, 1) = v.dn;
  }
  if (h.at(-N, 0) != cplx(0.0, 0.0))
    throw WindowOverflowError("walk_step_adjoint: amplitude would leave the window at -N");
  if (h.at(N, 1) != cplx(0.0, 0.0))
    throw WindowOverflowError("walk_step_adjoint: amplitude would leave the window at +N");
  SpinorState g(N);
  for (int x = -N; x <= N; ++x) {
    g.at(x, 0) = h.in_window(x + 1) ? h.at(x + 1, 0) : cplx(0.0, 0.0);
    g.at(x, 1) = h.in_window(x - 1) ? h.at(x - 1, 1) : cplx(0.0, 0.0);
  }
  return g;
}

SpinorState walk_evolve(const CoinParameters& coin, const SpinorState& f, int steps) {
  if (steps < 0) throw DomainError("walk_evolve: negative step count");
  SpinorState g = f;
  const Mat2 t = coin_matrix(coin);
  for (int k = 0; k < steps; ++k) g = walk_step(t, g);
  return g;
}

MatrixKernel MatrixKernel::zero(int radius) {
  MatrixKernel k;
  k.radius = radius;
  k.entries.assign(static_cast<std::size_t>(2 * radius + 1), Mat2::zero());
  return k;
}

double MatrixKernel::self_adjoint_defect() const {
  double worst = 0.0;
  for (int y = -radius; y <= radius; ++y)
    worst = std::max(worst, (at(-y) - at(y).adjoint()).opnorm());
  return worst;
}

SpinorState apply_kernel(const MatrixKernel& kernel, const SpinorState& f) {
  const int N = f.radius();
  SpinorState g(N);
  for (int x = -N; x <= N; ++x) {
    Vec2 acc;
    for (int y = -kernel.radius; y <= kernel.radius; ++y) {
      const int src = x - y;
      if (!f.in_window(src)) continue;
      acc = acc + kernel.at(y) * Vec2(f.at(src, 0), f.at(src, 1));
    }
    g.at(x, 0) = acc.up;
    g.at(x, 1) = acc.dn;
  }
  return g;
}

double apply_error_bound(const MatrixKernel& kernel, const SpinorState& f) {
  return kernel.tail_bound * f.norm();
}

}  // namespace qwalk
