#include <doctest.h>

#include <ncdg/linalg.hpp>

#include <random>

using namespace ncdg;

namespace {

MatQ from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  MatQ m = zeros((Eigen::Index)rows.size(),
                 (Eigen::Index)rows.begin()->size());
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) m(i, j++) = GRat(v);
    ++i;
  }
  return m;
}

MatQ random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::uniform_int_distribution<long> dist(-3, 3);
  MatQ m = zeros(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = GRat(dist(rng), dist(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing round-trips and reduces") {
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-6/3")) == "-2");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(parse_rational("3/-6") == Rational(-1, 2));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("GRat is a field") {
  GRat a(3, 2), b(-1, 5);
  CHECK(a * b / b == a);
  CHECK((a - a).is_zero());
  CHECK(GRat::i() * GRat::i() == GRat(-1));
  CHECK(a * a.conj() == GRat(Rational(13)));
  CHECK_THROWS(a / GRat(0));
}

TEST_CASE("rank_and_kernel identity") {
  auto rk = rank_and_kernel(identity(2));
  CHECK(rk.rank == 2);
  CHECK(rk.kernel.dim() == 0);
}

TEST_CASE("rank_and_kernel of [1, i]") {
  MatQ m = zeros(1, 2);
  m(0, 0) = GRat(1);
  m(0, 1) = GRat::i();
  auto rk = rank_and_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.dim() == 1);
  // kernel spanned by (-i, 1)
  VecQ v = rk.kernel.basis.col(0);
  CHECK(v(0) * GRat(1) + v(1) * GRat::i() == GRat(0));
  // normalized: free coordinate carries 1
  CHECK(v(1) == GRat(1));
  CHECK(v(0) == -GRat::i());
}

TEST_CASE("solve pivot-only convention") {
  MatQ m = from_ints({{1, 1}});
  VecQ b = zerov(1);
  b(0) = GRat(2);
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == GRat(2));
  CHECK((*x)(1) == GRat(0));

  MatQ m2 = from_ints({{1}, {1}});
  VecQ b2 = zerov(2);
  b2(1) = GRat(1);
  CHECK(!solve(m2, b2).has_value());

  auto xi = solve(identity(3), VecQ(zerov(3)));
  REQUIRE(xi.has_value());
  CHECK(is_zero(MatQ(*xi)));
}

TEST_CASE("rank equals rank of transpose and rank-nullity, randomized") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MatQ m = random_matrix(rng, 5, 7);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == rank_of(MatQ(m.transpose())));
    CHECK(rk.rank + rk.kernel.dim() == m.cols());
    CHECK(is_zero(MatQ(m * rk.kernel.basis)));
  }
}

TEST_CASE("quotient coords") {
  SUBCASE("kill a basis vector") {
    Subspace killed = Subspace::zero(3);
    killed.basis = zeros(3, 1);
    killed.basis(0, 0) = GRat(1);
    auto qc = quotient_coords(3, killed);
    CHECK(qc.dim == 2);
    CHECK(is_zero(MatQ(qc.project * killed.basis)));
    CHECK(MatQ(qc.project * qc.section) == identity(2));
  }
  SUBCASE("kill everything") {
    auto qc = quotient_coords(2, Subspace::full(2));
    CHECK(qc.dim == 0);
  }
  SUBCASE("random subspaces round-trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      MatQ gen = random_matrix(rng, 6, 3);
      Subspace killed = column_space(gen);
      auto qc = quotient_coords(6, killed);
      CHECK(qc.dim == 6 - killed.dim());
      CHECK(is_zero(MatQ(qc.project * killed.basis)));
      CHECK(MatQ(qc.project * qc.section) == identity(qc.dim));
    }
  }
}

TEST_CASE("intersect dimension formula") {
  SUBCASE("a intersect a") {
    MatQ gen = from_ints({{1, 0}, {2, 1}, {0, 3}});
    Subspace a = column_space(gen);
    Subspace c = intersect(a, a);
    CHECK(c.dim() == a.dim());
    CHECK(a.contains(c));
  }
  SUBCASE("complementary lines") {
    Subspace a = column_space(from_ints({{1}, {0}}));
    Subspace b = column_space(from_ints({{0}, {1}}));
    CHECK(intersect(a, b).dim() == 0);
  }
  SUBCASE("random modular law") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      Subspace a = column_space(random_matrix(rng, 6, 3));
      Subspace b = column_space(random_matrix(rng, 6, 4));
      Subspace cap = intersect(a, b);
      Subspace cup = sum(a, b);
      CHECK(a.dim() + b.dim() == cap.dim() + cup.dim());
      CHECK(a.contains(cap));
      CHECK(b.contains(cap));
    }
  }
}

TEST_CASE("determinism: same input gives identical output") {
  std::mt19937_64 rng(17);
  MatQ m = random_matrix(rng, 8, 8);
  auto r1 = rank_and_kernel(m);
  auto r2 = rank_and_kernel(m);
  CHECK(r1.rank == r2.rank);
  CHECK(r1.kernel.basis == r2.kernel.basis);
}
