#include <doctest.h>

#include <ncdg/lie_weil.hpp>

using namespace ncdg;

TEST_CASE("CE complex with trivial coefficients") {
  SUBCASE("abelian line: H = (1,1)") {
    auto g = abelian_lie(1);
    auto c = ce_complex(g, LieModule::trivial(g), 1);
    auto h = cohomology_dims(c);
    CHECK(h.h == std::vector<Eigen::Index>{1, 1});
  }
  SUBCASE("sl2: H = (1,0,0,1)") {
    auto g = sl2();
    auto c = ce_complex(g, LieModule::trivial(g), 3);
    auto h = cohomology_dims(c);
    CHECK(h.h == std::vector<Eigen::Index>{1, 0, 0, 1});
    CHECK(!h.top_is_bound);
  }
  SUBCASE("adjoint module of sl2 has no invariants") {
    auto g = sl2();
    auto c = ce_complex(g, LieModule::adjoint(g), 3);
    auto h = cohomology_dims(c);
    CHECK(h.h[0] == 0);
  }
  SUBCASE("matches the check_lie differential matrices") {
    auto g = sl2();
    auto c = ce_complex(g, LieModule::trivial(g), 3);
    auto [d1, d2] = lie_dual_d(g);
    CHECK(c.d[1] == d1);
    CHECK(c.d[2] == d2);
  }
}

TEST_CASE("invariant polynomials") {
  CHECK(invariant_polynomials(sl2(), 0).dim() == 1);
  CHECK(invariant_polynomials(sl2(), 1).dim() == 0);
  CHECK(invariant_polynomials(sl2(), 2).dim() == 1);  // Killing form
  auto gl2 = commutator_lie(matrix_algebra(2));
  CHECK(invariant_polynomials(gl2, 1).dim() == 1);  // trace
  CHECK(invariant_polynomials(gl2, 2).dim() == 2);  // tr^2, tr(x^2)
  auto ab = abelian_lie(1);
  for (Eigen::Index n = 0; n <= 3; ++n)
    CHECK(invariant_polynomials(ab, n).dim() == sym_dim(1, n));
}

TEST_CASE("Weil algebra of sl2") {
  auto g = sl2();
  auto W = weil_build(g, 5);
  CHECK(W.gda.dims == std::vector<Eigen::Index>{1, 3, 6, 10, 15, 21});

  auto rep = check_gda(W.gda);
  CHECK(rep.ok());

  auto oprep = verify_operation(W.gda, W.op);
  CHECK(oprep.ok());

  SUBCASE("contractible: cohomology trivial in degrees 1..4") {
    auto h = cohomology_dims(W.gda.complex());
    for (Eigen::Index n = 1; n <= 4; ++n) CHECK(h.h[n] == 0);
    CHECK(h.h[0] == 1);
  }

  SUBCASE("invariant cohomology trivial in degrees 1..4") {
    auto hi = invariant_cohomology(W.gda, W.op, 4);
    CHECK(hi[0] == 1);
    for (Eigen::Index n = 1; n <= 4; ++n) CHECK(hi[n] == 0);
  }

  SUBCASE("horizontal subalgebra is 1l (x) S(F)") {
    auto hor = horizontal_subspaces(W.gda, W.op);
    // degrees 0..5: S(F) contributes sym_dim(3, n/2) in even degrees
    for (Eigen::Index n = 0; n <= 5; ++n) {
      Eigen::Index expect = (n % 2 == 0) ? sym_dim(3, n / 2) : 0;
      CHECK(hor[n].dim() == expect);
    }
    // degree 2 horizontal has dimension 3 but no invariant part
    auto bc = basic_subcomplex(W.gda, W.op);
    CHECK(hor[2].dim() == 3);
    CHECK(bc.sub[2].dim() == 0);
    CHECK(bc.sub[0].dim() == 1);
    CHECK(bc.sub[1].dim() == 0);
  }

  SUBCASE("basic cohomology equals invariant polynomials") {
    auto h = weil_basic_cohomology(g, 4);
    CHECK(h == std::vector<Eigen::Index>{1, 0, 0, 0, 1});
  }
}

TEST_CASE("Weil basic cohomology, abelian line") {
  auto h = weil_basic_cohomology(abelian_lie(1), 4);
  CHECK(h == std::vector<Eigen::Index>{1, 0, 1, 0, 1});
}

TEST_CASE("Weil odd basic cohomology vanishes across small Lie algebras") {
  // solvable 2-dim: [x, y] = y
  LieAlgebraData sol;
  sol.dim = 2;
  sol.bracket.assign(2, zeros(2, 2));
  sol.bracket[0](1, 1) = GRat(1);
  sol.bracket[1](1, 0) = GRat(-1);
  REQUIRE(check_lie(sol).ok());

  for (auto& g : {sl2(), abelian_lie(1), abelian_lie(2), sol}) {
    auto h = weil_basic_cohomology(g, 3);
    CHECK(h[1] == 0);
    CHECK(h[3] == 0);
  }
}
