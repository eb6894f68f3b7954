#include <doctest.h>

#include <cmath>

#include "qwalk/dihedral.hpp"
#include "qwalk/errors.hpp"
#include "support/oracles.hpp"

using namespace qwalk;

TEST_SUITE("dihedral") {

TEST_CASE("group law, unit, inverses, generators") {
  const DihedralElement e = dihedral_identity();
  const DihedralElement a = dihedral_a();
  const DihedralElement b = dihedral_b();

  // ab = ba^{-1}, b^2 = e
  CHECK(dihedral_mul(a, b) == dihedral_mul(b, dihedral_inv(a)));
  CHECK(dihedral_mul(b, b) == e);

  for (int x = -4; x <= 4; ++x) {
    for (int mu : {1, -1}) {
      const DihedralElement g{x, mu};
      CHECK(dihedral_mul(g, dihedral_inv(g)) == e);
      CHECK(dihedral_mul(dihedral_inv(g), g) == e);
      CHECK(dihedral_mul(g, e) == g);
      CHECK(dihedral_mul(e, g) == g);
    }
  }
}

TEST_CASE("associativity holds exhaustively on the small ball") {
  for (int x1 = -4; x1 <= 4; ++x1)
    for (int m1 : {1, -1})
      for (int x2 = -4; x2 <= 4; ++x2)
        for (int m2 : {1, -1})
          for (int x3 = -4; x3 <= 4; ++x3)
            for (int m3 : {1, -1}) {
              const DihedralElement g1{x1, m1}, g2{x2, m2}, g3{x3, m3};
              CHECK(dihedral_mul(dihedral_mul(g1, g2), g3) ==
                    dihedral_mul(g1, dihedral_mul(g2, g3)));
            }
}

TEST_CASE("regular representation: basic moves and unitarity") {
  // R(a) delta_(0,1) = delta_(-1,1)
  const GroupFunction moved = regular_rep_apply(dihedral_a(), GroupFunction::delta({0, 1}));
  CHECK(std::abs(moved.at({-1, 1}) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(moved.terms().size() == 1);

  // R(e) is the identity
  const GroupFunction same = regular_rep_apply(dihedral_identity(), moved);
  CHECK(std::abs(same.at({-1, 1}) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(same.terms().size() == 1);

  testing::CoinSource src;
  GroupFunction f;
  for (int x = -3; x <= 3; ++x)
    for (int mu : {1, -1}) f.set({x, mu}, cplx(src.uniform(-1, 1), src.uniform(-1, 1)));
  const double before = f.norm();
  const GroupFunction g = regular_rep_apply({2, -1}, f);
  CHECK(std::abs(g.norm() - before) < 1e-14);
}

TEST_CASE("regular representation composes as a homomorphism") {
  // (R(g) f)(h) = f(h g) satisfies R(g1 g2) = R(g1) R(g2)
  for (int x1 = -4; x1 <= 4; ++x1)
    for (int m1 : {1, -1})
      for (int x2 = -4; x2 <= 4; ++x2)
        for (int m2 : {1, -1}) {
          const DihedralElement g1{x1, m1}, g2{x2, m2};
          const GroupFunction f = GroupFunction::delta({1, -1});
          const GroupFunction lhs = regular_rep_apply(dihedral_mul(g1, g2), f);
          const GroupFunction rhs = regular_rep_apply(g1, regular_rep_apply(g2, f));
          for (const auto& [h, v] : lhs.terms()) CHECK(std::abs(v - rhs.at(h)) < 1e-15);
          CHECK(lhs.terms().size() == rhs.terms().size());
        }
}

TEST_CASE("matrix realization satisfies the walk relations") {
  // alpha = i, beta = 1: W^2 = -I exactly
  const Mat2 w = w_matrix(cplx(1.0, 0.0));
  CHECK((w * w + Mat2::identity()).opnorm() == 0.0);
  const RelationReport rep = check_qw_relations(v_matrix(cplx(0.0, 1.0)), w);
  CHECK(rep.qw1 < 1e-15);
  CHECK(rep.qw2 < 1e-15);

  testing::CoinSource src;
  for (int i = 0; i < 8; ++i) {
    const CoinParameters c = src.next();
    const RelationReport r = check_qw_relations(v_matrix(c.alpha), w_matrix(c.beta));
    CHECK(r.qw1 < 1e-15);
    CHECK(r.qw2 < 1e-15);
  }
}

TEST_CASE("violating pair is reported") {
  const RelationReport bad = check_qw_relations(Mat2::identity(), Mat2::identity());
  CHECK(bad.qw1 > 1.0);  // W^2 + I = 2I
}

TEST_CASE("lattice realization satisfies the walk relations") {
  testing::CoinSource src;
  const CoinParameters c = src.next();
  const RelationReport rep = check_qw_relations_lattice(c.alpha, c.beta, 32);
  CHECK(rep.qw1 < 1e-13);
  CHECK(rep.qw2 < 1e-13);
}

TEST_CASE("chebyshev power formula: matrix realization") {
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(chebyshev_power(v_matrix(1.0), w_matrix(1.0), h, h, 0) == 0.0);
  CHECK(chebyshev_power(v_matrix(1.0), w_matrix(1.0), h, h, 1) < 1e-15);
  CHECK(chebyshev_power(v_matrix(1.0), w_matrix(1.0), h, h, 12) < 1e-10);

  testing::CoinSource src;
  for (int n = 0; n <= 20; ++n) {
    const CoinParameters c = src.next();
    CHECK(chebyshev_power(v_matrix(c.alpha), w_matrix(c.beta), c.s, c.r, n) < 1e-10);
  }
}

TEST_CASE("chebyshev power formula: lattice realization") {
  testing::CoinSource src;
  const CoinParameters c = src.next();
  for (int n : {0, 1, 2, 7, 13, 20}) {
    CHECK(chebyshev_power_lattice(c.alpha, c.beta, c.s, c.r, n, 4) < 1e-10);
  }
}

TEST_CASE("intertwiner maps the group basis as displayed") {
  const CoinParameters c = make_coin(cplx(0.5, 0.5), cplx(0.5, -0.5));
  // delta_(0,1) -> delta_0 e1
  const SpinorState im1 = intertwiner(GroupFunction::delta({0, 1}), c, 6);
  CHECK(std::abs(im1.at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
  // delta_(0,-1) -> i beta^{-1} delta_1 e2
  const SpinorState im2 = intertwiner(GroupFunction::delta({0, -1}), c, 6);
  CHECK(std::abs(im2.at(1, 1) - cplx(0.0, 1.0) / c.beta) < 1e-15);
  // delta_(x,1) -> alpha^{-x} delta_{-x} e1
  const SpinorState im3 = intertwiner(GroupFunction::delta({3, 1}), c, 6);
  CHECK(std::abs(im3.at(-3, 0) - std::conj(c.alpha) * std::conj(c.alpha) * std::conj(c.alpha)) <
        1e-14);
}

TEST_CASE("intertwiner is isometric on basis blocks") {
  testing::CoinSource src;
  const CoinParameters c = src.next();
  const int m = 5;
  std::vector<SpinorState> images;
  for (int x = -m; x <= m; ++x)
    for (int mu : {1, -1}) images.push_back(intertwiner(GroupFunction::delta({x, mu}), c, m + 2));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      const cplx g = images[i].inner(images[j]);
      const cplx want = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      CHECK(std::abs(g - want) < 1e-14);
    }
  }
}

TEST_CASE("intertwiner overflow raises") {
  const CoinParameters c = hadamard_coin();
  CHECK_THROWS_AS(intertwiner(GroupFunction::delta({8, 1}), c, 4), WindowOverflowError);
}

TEST_CASE("hand expansion of the equivalence on the generators") {
  testing::CoinSource src;
  const CoinParameters c = src.next();
  // g = a on delta_(0,1): V(delta_0 e1) = alpha (delta_1 e1)
  const SpinorState lhs = walk_step(v_matrix(c.alpha), intertwiner(GroupFunction::delta({0, 1}), c, 4));
  CHECK(std::abs(lhs.at(1, 0) - c.alpha) < 1e-15);
  const SpinorState rhs =
      intertwiner(regular_rep_apply(dihedral_a(), GroupFunction::delta({0, 1})), c, 4);
  CHECK((lhs - rhs).norm() < 1e-14);

  // rho(b)^2 = I since (-iW)^2 = -W^2
  const SpinorState f = intertwiner(GroupFunction::delta({1, -1}), c, 4);
  const SpinorState wtwice =
      walk_step(w_matrix(c.beta), walk_step(w_matrix(c.beta), f)) * cplx(-1.0, 0.0);
  CHECK((wtwice - f).norm() < 1e-14);
}

TEST_CASE("unitary equivalence with the regular representation") {
  testing::CoinSource src;
  for (int i = 0; i < 4; ++i) {
    const CoinParameters c = (i == 0) ? hadamard_coin() : src.next();
    CHECK(verify_equivalence(c, 8) < 1e-13);
  }
}

}  // TEST_SUITE
