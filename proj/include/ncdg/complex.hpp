#pragma once

#include <ncdg/algebra.hpp>

#include <cstdint>
#include <vector>

namespace ncdg {

/// Cochain complex with exact coboundaries d[n]: dims[n] -> dims[n+1].
/// `terminated` marks that the complex is genuinely zero above the top
/// stored degree (so top cohomology is exact); otherwise the top degree is a
/// truncation artifact and its reported cohomology carries a flag.
struct CochainComplex {
  std::vector<Eigen::Index> dims;
  std::vector<MatQ> d;  // size dims.size()-1 (or dims.size() when terminated)
  bool terminated = false;

  Eigen::Index top_degree() const { return (Eigen::Index)dims.size() - 1; }
  void validate() const;  // shapes and d.d = 0, throws naming the degree
};

struct CohomologyDims {
  std::vector<Eigen::Index> h;
  bool top_is_bound = false;  // top entry = ker-assumed-full minus image
};

CohomologyDims cohomology_dims(const CochainComplex& c);

/// True iff d h + h d = identity on degrees >= from_degree (within the
/// stored range; the top degree is checked when the needed d exists).
bool verify_homotopy(const CochainComplex& c, const std::vector<MatQ>& h,
                     Eigen::Index from_degree);

/// Degree-truncated graded algebra with differential. Product tensors are
/// materialized for p+q <= prod_max only; checks beyond that are skipped and
/// flagged truncated.
struct GradedDiffAlgebra {
  Eigen::Index max_degree = 0;
  Eigen::Index prod_max = 0;
  std::vector<Eigen::Index> dims;          // 0..max_degree
  std::vector<MatQ> d;                     // d[n]: n -> n+1, n < max_degree
  std::vector<std::vector<MatQ>> product;  // product[p][q], p+q <= prod_max
  VecQ unit;                               // degree-0 coordinates
  std::vector<MatQ> star;                  // conjugate-linear mats, empty = none
  bool terminated = false;

  bool has_star() const { return !star.empty(); }
  VecQ mul(Eigen::Index p, Eigen::Index q, const VecQ& x, const VecQ& y) const;
  VecQ apply_star(Eigen::Index n, const VecQ& v) const;
  CochainComplex complex() const;
};

struct GdaReport {
  bool associative = true;
  bool antiderivation = true;
  bool d_squared_zero = true;
  bool unit_ok = true;
  bool star_ok = true;
  bool truncated = false;  // some assertions clipped by the degree cap
  bool ok() const {
    return associative && antiderivation && d_squared_zero && unit_ok &&
           star_ok;
  }
};

GdaReport check_gda(const GradedDiffAlgebra& g);

/// Operation of a Lie algebra: i[X][n]: dims[n] -> dims[n-1] per Lie basis
/// element X, each an antiderivation of degree -1.
struct OperationData {
  LieAlgebraData lie;
  std::vector<std::vector<MatQ>> i;  // i[X][n], n >= 1; i[X][0] is 0 x dims[0]

  MatQ lie_derivative(const GradedDiffAlgebra& g, Eigen::Index X,
                      Eigen::Index n) const;  // L_X at degree n < max_degree
};

struct OperationReport {
  bool i_antiderivation = true;
  bool anticommute = true;   // i_X i_Y + i_Y i_X = 0
  bool equivariance = true;  // [L_X, i_Y] = i_{[X,Y]}
  bool l_homomorphism = true;  // [L_X, L_Y] = L_{[X,Y]}
  bool l_commutes_d = true;
  bool truncated = false;
  bool ok() const {
    return i_antiderivation && anticommute && equivariance && l_homomorphism &&
           l_commutes_d;
  }
};

OperationReport verify_operation(const GradedDiffAlgebra& g,
                                 const OperationData& op);

struct SubComplex {
  std::vector<Subspace> sub;  // per degree
  CochainComplex restricted;  // d expressed in subspace coordinates
};

/// Basic subcomplex (horizontal and invariant) on degrees 0..max_degree-1;
/// throws when d fails to preserve the computed subspaces.
SubComplex basic_subcomplex(const GradedDiffAlgebra& g, const OperationData& op);
SubComplex invariant_subcomplex(const GradedDiffAlgebra& g,
                                const OperationData& op);

/// Horizontal subspaces per degree 0..max_degree (not d-stable in general).
std::vector<Subspace> horizontal_subspaces(const GradedDiffAlgebra& g,
                                           const OperationData& op);

/// Exact cohomology of the basic subcomplex for degrees 0..upto; requires
/// upto <= max_degree-1 so every needed differential exists.
std::vector<Eigen::Index> basic_cohomology(const GradedDiffAlgebra& g,
                                           const OperationData& op,
                                           Eigen::Index upto);
std::vector<Eigen::Index> invariant_cohomology(const GradedDiffAlgebra& g,
                                               const OperationData& op,
                                               Eigen::Index upto);

/// Skew tensor product of graded differential algebras:
/// (x (x) x')(y (x) y') = (-1)^{|x'||y|} xy (x) x'y',
/// d(x (x) x') = dx (x) x' + (-1)^{|x|} x (x) dx'.
GradedDiffAlgebra gda_tensor(const GradedDiffAlgebra& a,
                             const GradedDiffAlgebra& b);

bool kunneth_check(const GradedDiffAlgebra& g1, const GradedDiffAlgebra& g2,
                   Eigen::Index upto);

// ---- small combinatorics shared by the exterior-algebra style bases ----

/// All k-subsets of {0..n-1} as ascending index vectors, lexicographic.
std::vector<std::vector<int>> subsets_of(int n, int k);

/// Rank of an ascending k-subset in the lexicographic order of subsets_of.
Eigen::Index subset_rank(int n, const std::vector<int>& s);

/// Sign of merging two disjoint ascending runs into one ascending run
/// (+1/-1), or 0 when they intersect. Masks are bitmask encodings.
int merge_sign(std::uint32_t a, std::uint32_t b);

std::uint32_t mask_of(const std::vector<int>& s);
std::vector<int> unmask(std::uint32_t m);

}  // namespace ncdg
