#pragma once

#include <ncdg/complex.hpp>

namespace ncdg {

/// Multilinear M-valued cochain of degree n: value tensor indexed by
/// (argument tuple, module coordinate), tuple leftmost-slowest, so the flat
/// index of w(e_{i1},..,e_{in}) component m is tuple_rank * dimM + m.
struct Cochain {
  Eigen::Index degree = 0;
  Eigen::Index adim = 0;
  Eigen::Index mdim = 1;
  VecQ values;

  Eigen::Index space_dim() const { return values.size(); }
};

Eigen::Index hochschild_dim(Eigen::Index adim, Eigen::Index mdim,
                            Eigen::Index n);

/// Coboundary d_H: C^n(A, M) -> C^{n+1}(A, M).
MatQ hochschild_d_matrix(const FiniteAlgebra& a, const Bimodule& m,
                         Eigen::Index n);
Cochain hochschild_d(const FiniteAlgebra& a, const Bimodule& m,
                     const Cochain& w);

/// The differential of the scalar complex C(A) (minus the dual of the
/// product extended as an antiderivation): the merge-sum formula.
MatQ scalar_d_matrix(const FiniteAlgebra& a, Eigen::Index n);

/// The Hochschild coboundary of C(A, A*) transported to C(A) along the
/// canonical identification C^n(A) = C^{n-1}(A, A*); zero on degree 0.
MatQ scalar_dh_matrix(const FiniteAlgebra& a, Eigen::Index n);

/// A* as an (A, A)-bimodule: (x phi y)(z) = phi(y z x).
Bimodule dual_bimodule(const FiniteAlgebra& a);

/// Unit-insertion homotopy h(w)(x_1,..,x_{n-1}) = w(1l, x_1,..): the
/// contraction for the scalar complex (C(A), d).
MatQ unit_insert_homotopy(const FiniteAlgebra& a, Eigen::Index n);

/// Contraction k of the tensor-algebra complex: full complex (C(A), d) as a
/// CochainComplex on degrees 0..upto (d stored through upto-1).
CochainComplex scalar_complex(const FiniteAlgebra& a, Eigen::Index upto);

struct HochschildCohomology {
  std::vector<Eigen::Index> dims;             // H^0..H^upto, exact
  std::vector<Eigen::Index> normalized_dims;  // same from the normalized rows
  bool agree = false;
};

HochschildCohomology hochschild_cohomology(const FiniteAlgebra& a,
                                           const Bimodule& m,
                                           Eigen::Index upto);

/// Normalized subspace of C^n(A, M): cochains vanishing when any argument
/// is the unit.
Subspace normalized_subspace(const FiniteAlgebra& a, const Bimodule& m,
                             Eigen::Index n);

struct CupResult {
  Cochain product;     // valued in M (x)_A N
  TensorOverA target;  // the quotient bimodule and its coordinates
};

CupResult cup(const FiniteAlgebra& a, const Bimodule& m, const Bimodule& n,
              const Cochain& alpha, const Cochain& beta);

/// Full antisymmetrization S and cyclic antisymmetrization C on C^n(A).
MatQ antisymmetrize_matrix(const FiniteAlgebra& a, Eigen::Index n);
MatQ cyclic_matrix(const FiniteAlgebra& a, Eigen::Index n);

struct CyclicCohomology {
  // Raw dims of the complex (Im C, d_H) per C(A)-degree 0..upto. The cyclic
  // cohomology in the usual indexing is the shift: H_lambda^m = raw[m+1].
  std::vector<Eigen::Index> raw;
  std::vector<Eigen::Index> im_c_dims;
};

CyclicCohomology cyclic_cohomology(const FiniteAlgebra& a, Eigen::Index upto);

/// C(A) as a graded differential algebra (tensor concatenation product)
/// together with the operation a -> i_a of the underlying Lie algebra.
struct ScalarCochainGda {
  GradedDiffAlgebra gda;
  OperationData op;
};

ScalarCochainGda scalar_cochain_gda(const FiniteAlgebra& a,
                                    Eigen::Index max_degree,
                                    Eigen::Index prod_max);

/// Basic cohomology of A: cohomology of the basic subcomplex of C(A) for
/// the operation a -> i_a, degrees 0..upto. Exact.
std::vector<Eigen::Index> basic_cohomology_A(const FiniteAlgebra& a,
                                             Eigen::Index upto);

}  // namespace ncdg
