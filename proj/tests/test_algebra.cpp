#include <doctest.h>

#include <ncdg/algebra.hpp>

#include <random>

using namespace ncdg;

namespace {

// Change of basis by a random invertible matrix keeps associativity and
// produces messy-looking but valid structure constants.
FiniteAlgebra rebase(const FiniteAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  MatQ p;
  do {
    p = zeros(a.dim, a.dim);
    for (Eigen::Index i = 0; i < a.dim; ++i)
      for (Eigen::Index j = 0; j < a.dim; ++j) p(i, j) = GRat(dist(rng));
  } while (rank_of(p) < a.dim);
  MatQ pinv = *solve_matrix(p, identity(a.dim));
  FiniteAlgebra b;
  b.dim = a.dim;
  b.unit = pinv * a.unit;
  // f_i f_j = P^{-1}((P f_i)(P f_j))
  b.mul.assign(a.dim, zeros(a.dim, a.dim));
  for (Eigen::Index i = 0; i < a.dim; ++i)
    for (Eigen::Index j = 0; j < a.dim; ++j) {
      VecQ prod = pinv * a.multiply(p.col(i), p.col(j));
      for (Eigen::Index k = 0; k < a.dim; ++k) b.mul[i](k, j) = prod(k);
    }
  return b;
}

LieAlgebraData rebase_lie(const LieAlgebraData& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  MatQ p;
  do {
    p = zeros(g.dim, g.dim);
    for (Eigen::Index i = 0; i < g.dim; ++i)
      for (Eigen::Index j = 0; j < g.dim; ++j) p(i, j) = GRat(dist(rng));
  } while (rank_of(p) < g.dim);
  MatQ pinv = *solve_matrix(p, identity(g.dim));
  LieAlgebraData h;
  h.dim = g.dim;
  h.bracket.assign(g.dim, zeros(g.dim, g.dim));
  for (Eigen::Index i = 0; i < g.dim; ++i)
    for (Eigen::Index j = 0; j < g.dim; ++j) {
      VecQ br = pinv * g.bra(p.col(i), p.col(j));
      for (Eigen::Index k = 0; k < g.dim; ++k) h.bracket[i](k, j) = br(k);
    }
  return h;
}

void perturb_one_entry(FiniteAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<Eigen::Index> pick(0, a.dim - 1);
  a.mul[pick(rng)](pick(rng), pick(rng)) += GRat(1);
}

}  // namespace

TEST_CASE("matrix algebra basics") {
  auto m1 = matrix_algebra(1);
  CHECK(m1.dim == 1);
  CHECK(check_algebra(m1).ok());

  auto m2 = matrix_algebra(2);
  CHECK(m2.dim == 4);
  auto rep = check_algebra(m2);
  CHECK(rep.ok());
  CHECK(rep.associative_d2);

  // e12 e21 = e11, e12 e12 = 0 (basis order e11,e12,e21,e22)
  VecQ p = m2.multiply(m2.basis_vec(1), m2.basis_vec(2));
  CHECK(p == m2.basis_vec(0));
  CHECK(is_zero(MatQ(m2.multiply(m2.basis_vec(1), m2.basis_vec(1)))));

  CHECK(center(m2).dim() == 1);
  CHECK_THROWS(matrix_algebra(0));
}

TEST_CASE("truncated polynomial algebras") {
  CHECK(truncated_poly(1).dim == 1);
  auto a2 = truncated_poly(2);
  CHECK(check_algebra(a2).ok());
  CHECK(is_zero(MatQ(a2.multiply(a2.basis_vec(1), a2.basis_vec(1)))));
  auto a3 = truncated_poly(3);
  CHECK(check_algebra(a3).ok());
  CHECK(center(a3).dim() == 3);
  auto der = derivations(a3);
  CHECK(der.der.dim() == 2);
  CHECK(der.inner.dim() == 0);
  CHECK_THROWS(truncated_poly(0));
}

TEST_CASE("derivations of matrix algebras are inner, Der = sl(n)") {
  auto m2 = matrix_algebra(2);
  auto d = derivations(m2);
  CHECK(d.der.dim() == 3);
  CHECK(d.inner.dim() == 3);
  CHECK(d.out_dim == 0);

  auto c = truncated_poly(1);
  CHECK(derivations(c).der.dim() == 0);
}

TEST_CASE("center of direct sums") {
  auto m2 = matrix_algebra(2);
  auto s = direct_sum(m2, m2);
  CHECK(check_algebra(s).ok());
  CHECK(center(s).dim() == 2);
}

TEST_CASE("tensor product algebra") {
  auto a = tensor_algebra(truncated_poly(2), truncated_poly(2));
  CHECK(a.dim == 4);
  CHECK(check_algebra(a).ok());
  CHECK(center(a).dim() == 4);
}

TEST_CASE("commutator Lie algebra") {
  auto a3 = truncated_poly(3);
  auto g = commutator_lie(a3);
  for (auto& b : g.bracket) CHECK(is_zero(b));

  auto m2 = matrix_algebra(2);
  auto gl2 = commutator_lie(m2);
  CHECK(check_lie(gl2).ok());
  // [e12, e21] = e11 - e22
  VecQ br = gl2.bra(gl2.basis_vec(1), gl2.basis_vec(2));
  VecQ expect = zerov(4);
  expect(0) = GRat(1);
  expect(3) = GRat(-1);
  CHECK(br == expect);
}

TEST_CASE("check_lie on sl2 and abelian") {
  CHECK(check_lie(sl2()).ok());
  CHECK(check_lie(abelian_lie(2)).ok());
}

TEST_CASE("lemma equivalence: associativity matches d^2 = 0 on random tables") {
  std::mt19937_64 rng(23);
  int disagreements = 0;
  for (int trial = 0; trial < 50; ++trial) {
    FiniteAlgebra a;
    switch (trial % 4) {
      case 0: a = rebase(matrix_algebra(2), rng); break;
      case 1: a = rebase(truncated_poly(3), rng); break;
      case 2:
        a = rebase(direct_sum(truncated_poly(2), truncated_poly(2)), rng);
        break;
      default:
        a = rebase(tensor_algebra(truncated_poly(2), truncated_poly(2)), rng);
    }
    if (trial % 2 == 1) perturb_one_entry(a, rng);
    auto rep = check_algebra(a);
    if (!rep.routes_agree) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("lemma equivalence: Jacobi matches d^2 = 0 on random tables") {
  std::mt19937_64 rng(29);
  int disagreements = 0;
  for (int trial = 0; trial < 50; ++trial) {
    LieAlgebraData g = rebase_lie(trial % 2 ? sl2() : abelian_lie(3), rng);
    if (trial % 3 == 1) {
      // antisymmetric random edit
      std::uniform_int_distribution<Eigen::Index> pick(0, g.dim - 1);
      Eigen::Index i = pick(rng), j = pick(rng), k = pick(rng);
      if (i != j) {
        g.bracket[i](k, j) += GRat(1);
        g.bracket[j](k, i) -= GRat(1);
      }
    }
    if (!check_lie(g).routes_agree) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("ad(x) is a derivation, exactly") {
  auto m2 = matrix_algebra(2);
  auto d = derivations(m2);
  for (Eigen::Index i = 0; i < m2.dim; ++i) {
    MatQ ad = m2.left_mult(m2.basis_vec(i)) - m2.right_mult(m2.basis_vec(i));
    VecQ flat = zerov(m2.dim * m2.dim);
    for (Eigen::Index c = 0; c < m2.dim; ++c)
      for (Eigen::Index r = 0; r < m2.dim; ++r) flat(c * m2.dim + r) = ad(r, c);
    CHECK(d.der.contains(flat));
  }
}

TEST_CASE("derivation star maps der to der") {
  auto m2 = matrix_algebra(2);
  auto d = derivations(m2);
  for (Eigen::Index c = 0; c < d.der.dim(); ++c) {
    MatQ X = zeros(m2.dim, m2.dim);
    for (Eigen::Index cc = 0; cc < m2.dim; ++cc)
      for (Eigen::Index r = 0; r < m2.dim; ++r)
        X(r, cc) = d.der.basis(cc * m2.dim + r, c);
    MatQ Xs = derivation_star(m2, X);
    VecQ flat = zerov(m2.dim * m2.dim);
    for (Eigen::Index cc = 0; cc < m2.dim; ++cc)
      for (Eigen::Index r = 0; r < m2.dim; ++r)
        flat(cc * m2.dim + r) = Xs(r, cc);
    CHECK(d.der.contains(flat));
  }
}

TEST_CASE("center is closed under multiplication and contains unit") {
  for (auto a : {matrix_algebra(2),
                 direct_sum(matrix_algebra(2), truncated_poly(2))}) {
    Subspace z = center(a);
    CHECK(z.contains(a.unit));
    for (Eigen::Index i = 0; i < z.dim(); ++i)
      for (Eigen::Index j = 0; j < z.dim(); ++j)
        CHECK(z.contains(VecQ(a.multiply(z.basis.col(i), z.basis.col(j)))));
  }
}

TEST_CASE("commutator_lie output passes check_lie on random rebased algebras") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = rebase(matrix_algebra(2), rng);
    REQUIRE(check_algebra(a).ok());
    CHECK(check_lie(commutator_lie(a)).ok());
  }
}

TEST_CASE("bimodule checks") {
  auto m2 = matrix_algebra(2);
  auto reg = regular_bimodule(m2);
  CHECK(check_bimodule(reg));

  StarBimodule sb{reg, *m2.star_mat};
  CHECK(check_star_bimodule(sb));

  auto t = tensor_bimodule(reg, reg);
  CHECK(check_bimodule(t));

  // A (x)_A A = A
  auto q = tensor_over_algebra(reg, reg);
  CHECK(q.quotient.dim == 4);
  CHECK(check_bimodule(q.quotient));
}

TEST_CASE("non-associative octonion-like table rejected by both routes") {
  // Cayley-style signed multiplication table on 8 basis elements.
  static const int tab[8][8] = {
      {1, 2, 3, 4, 5, 6, 7, 8},     {2, -1, 4, -3, 6, -5, -8, 7},
      {3, -4, -1, 2, 7, 8, -5, -6}, {4, 3, -2, -1, 8, -7, 6, -5},
      {5, -6, -7, -8, -1, 2, 3, 4}, {6, 5, -8, 7, -2, -1, -4, 3},
      {7, 8, 5, -6, -3, 4, -1, -2}, {8, -7, 6, 5, -4, -3, 2, -1}};
  FiniteAlgebra o;
  o.dim = 8;
  o.mul.assign(8, zeros(8, 8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int v = tab[i][j];
      o.mul[i](std::abs(v) - 1, j) = GRat(v > 0 ? 1 : -1);
    }
  o.unit = o.basis_vec(0);
  auto rep = check_algebra(o);
  CHECK(!rep.associative_direct);
  CHECK(!rep.associative_d2);
  CHECK(rep.routes_agree);
  CHECK(rep.unit_ok);
}
