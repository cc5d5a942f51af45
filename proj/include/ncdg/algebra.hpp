#pragma once

#include <ncdg/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ncdg {

/// Finite-dimensional unital associative algebra over Q(i), given by
/// structure constants: e_i * e_j = sum_k mul[i](k, j) e_k, i.e. mul[i] is
/// the matrix of left multiplication by e_i.
struct FiniteAlgebra {
  Eigen::Index dim = 0;
  std::vector<MatQ> mul;  // mul[i] = left multiplication by e_i, dim x dim
  VecQ unit;
  // Conjugate-linear involution: star(x) = star_mat * conj(x); empty if none.
  std::optional<MatQ> star_mat;
  std::vector<std::string> labels;

  VecQ multiply(const VecQ& x, const VecQ& y) const;
  MatQ left_mult(const VecQ& x) const;   // y -> x*y
  MatQ right_mult(const VecQ& y) const;  // x -> x*y
  VecQ star(const VecQ& x) const;
  bool has_star() const { return star_mat.has_value(); }
  VecQ basis_vec(Eigen::Index i) const;
  GRat coeff(const VecQ& x, Eigen::Index k) const { return x(k); }
};

struct LieAlgebraData {
  Eigen::Index dim = 0;
  std::vector<MatQ> bracket;  // bracket[i] = ad(e_i): y -> [e_i, y]
  std::vector<std::string> labels;

  VecQ bra(const VecQ& x, const VecQ& y) const;
  MatQ ad(const VecQ& x) const;
  VecQ basis_vec(Eigen::Index i) const {
    VecQ v = zerov(dim);
    v(i) = GRat(1);
    return v;
  }
};

/// (A,B)-bimodule by per-basis action matrices.
struct Bimodule {
  const FiniteAlgebra* left_algebra = nullptr;
  const FiniteAlgebra* right_algebra = nullptr;
  Eigen::Index dim = 0;
  std::vector<MatQ> left;   // left[i]: action of left basis e_i
  std::vector<MatQ> right;  // right[j]: action of right basis e_j

  MatQ left_act(const VecQ& a) const;
  MatQ right_act(const VecQ& b) const;
};

struct StarBimodule {
  Bimodule base;  // both sides over the same star-algebra
  MatQ star_mat;  // conjugate-linear: star(v) = star_mat * conj(v)
};

struct AlgebraReport {
  bool associative_direct = false;
  bool associative_d2 = false;  // d^2 = 0 on C^1 for the dual antiderivation
  bool routes_agree = false;
  bool unit_ok = false;
  bool star_ok = true;  // true when no star present
  bool ok() const {
    return associative_direct && routes_agree && unit_ok && star_ok;
  }
};

struct LieReport {
  bool antisymmetric = false;
  bool jacobi_direct = false;
  bool jacobi_d2 = false;
  bool routes_agree = false;
  bool ok() const { return antisymmetric && jacobi_direct && routes_agree; }
};

struct DerivationsResult {
  Subspace der;    // subspace of End(A) = Q(i)^{dim^2}, column-major matrices
  Subspace inner;  // span of ad(e_i)
  Eigen::Index out_dim = 0;
};

FiniteAlgebra matrix_algebra(Eigen::Index n);
FiniteAlgebra truncated_poly(Eigen::Index k);
FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b);
FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

AlgebraReport check_algebra(const FiniteAlgebra& a);
LieReport check_lie(const LieAlgebraData& g);

/// The degree-1 and degree-2 pieces of the antiderivation of T(A*) given by
/// minus the dual of the product (the d whose square tests associativity).
std::pair<MatQ, MatQ> algebra_dual_d(const FiniteAlgebra& a);
/// Same for Lambda g* and the bracket (the d whose square tests Jacobi).
std::pair<MatQ, MatQ> lie_dual_d(const LieAlgebraData& g);

Subspace center(const FiniteAlgebra& a);
DerivationsResult derivations(const FiniteAlgebra& a);
LieAlgebraData commutator_lie(const FiniteAlgebra& a);

/// sl(2) with basis h, e, f: [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebraData sl2();
LieAlgebraData abelian_lie(Eigen::Index n);
/// Underlying Lie algebra from explicit derivation matrices acting on A
/// (bracket = commutator of matrices); used for Der(A).
LieAlgebraData lie_from_matrices(const std::vector<MatQ>& mats,
                                 Eigen::Index source_dim);

/// X -> X* with X*(a) = (X(a*))* as a matrix on End(A) coordinates.
MatQ derivation_star(const FiniteAlgebra& a, const MatQ& X);

bool check_bimodule(const Bimodule& m);
bool check_star_bimodule(const StarBimodule& m);

/// A as a bimodule over itself.
Bimodule regular_bimodule(const FiniteAlgebra& a);
/// Trivial one-dimensional bimodule is not canonical for general A; the
/// scalar-cochain machinery has its own code path instead (see hochschild).

/// M (x) N over C, with left action of A through M and right action of B
/// through N. Index flattening: (m, n) -> m * dimN + n.
Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n);

struct TensorOverA {
  Bimodule quotient;      // M (x)_A N as an (A, B)-bimodule
  QuotientCoords coords;  // from M (x) N coordinates
};

/// M (x)_A N: quotient of M (x) N by the span of (m a)(x) n - m (x)(a n).
TensorOverA tensor_over_algebra(const Bimodule& m, const Bimodule& n);

// Index flattening helpers (leftmost index slowest).
inline Eigen::Index flat2(Eigen::Index i, Eigen::Index j, Eigen::Index dj) {
  return i * dj + j;
}
MatQ kron(const MatQ& a, const MatQ& b);

}  // namespace ncdg
