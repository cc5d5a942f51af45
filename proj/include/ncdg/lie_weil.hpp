#pragma once

#include <ncdg/complex.hpp>

namespace ncdg {

/// Representation of a Lie algebra: action[X] are the matrices pi(X) with
/// pi(X)pi(Y) - pi(Y)pi(X) = pi([X,Y]).
struct LieModule {
  LieAlgebraData lie;
  Eigen::Index dim = 0;
  std::vector<MatQ> action;

  static LieModule trivial(const LieAlgebraData& g, Eigen::Index d = 1);
  static LieModule adjoint(const LieAlgebraData& g);
  bool valid() const;
};

/// Chevalley-Eilenberg complex Lambda^n g* (x) E, degrees 0..upto.
/// Basis index: subset_rank * dimE + module index.
CochainComplex ce_complex(const LieAlgebraData& g, const LieModule& e,
                          Eigen::Index upto);

/// Invariant homogeneous polynomials of degree n on g (coadjoint action on
/// Sym^n g*). Ambient coordinates: monomials of degree n, lexicographic.
Subspace invariant_polynomials(const LieAlgebraData& g, Eigen::Index n);

/// Monomial count of Sym^n on `vars` variables.
Eigen::Index sym_dim(Eigen::Index vars, Eigen::Index n);

/// Exterior algebra Lambda g* as a graded differential algebra with the
/// differential corresponding to the bracket (trivial coefficients).
GradedDiffAlgebra exterior_gda(const LieAlgebraData& g);

/// C_wedge(g, A) for g acting by derivations on A: graded differential
/// algebra with the evaluation-antisymmetrization product, together with the
/// canonical operation i_X(w)(X_1,..) = w(X, X_1,..).
/// Basis index: subset_rank * dimA + algebra index. Truncated at max_degree
/// (= dim g when omitted, where it terminates).
struct CochainAlgebra {
  GradedDiffAlgebra gda;
  OperationData op;
};
CochainAlgebra cochain_algebra(const LieAlgebraData& g, const FiniteAlgebra& a,
                               const std::vector<MatQ>& action,
                               Eigen::Index max_degree);

/// Weil algebra of g truncated at max_degree: free graded commutative on
/// degree-1 generators (one per basis element) and degree-2 generators, with
/// the standard differential; includes the canonical operation.
struct WeilAlgebra {
  GradedDiffAlgebra gda;
  OperationData op;
  // basis bookkeeping: monomial = (exterior mask, symmetric multiset)
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<int>>>> basis;
  Eigen::Index generators = 0;
};

WeilAlgebra weil_build(const LieAlgebraData& g, Eigen::Index max_degree);

/// Cohomology of the basic subcomplex of W(g), degrees 0..upto, checked
/// against invariant_polynomials (even degrees) and 0 (odd degrees);
/// throws if the comparison fails.
std::vector<Eigen::Index> weil_basic_cohomology(const LieAlgebraData& g,
                                                Eigen::Index upto);

}  // namespace ncdg
