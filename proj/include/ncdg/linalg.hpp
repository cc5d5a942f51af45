#pragma once

#include <ncdg/rational.hpp>

#include <optional>
#include <vector>

namespace ncdg {

using MatQ = Eigen::Matrix<GRat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<GRat, Eigen::Dynamic, 1>;

inline MatQ zeros(Eigen::Index r, Eigen::Index c) {
  return MatQ::Constant(r, c, GRat(0));
}
inline VecQ zerov(Eigen::Index n) { return VecQ::Constant(n, GRat(0)); }
inline MatQ identity(Eigen::Index n) {
  MatQ m = zeros(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = GRat(1);
  return m;
}
inline bool is_zero(const MatQ& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}
inline MatQ conj_transpose(const MatQ& m) {
  MatQ r = zeros(m.cols(), m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) r(j, i) = m(i, j).conj();
  return r;
}
inline MatQ conjugate(const MatQ& m) {
  MatQ r = m;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).conj();
  return r;
}
MatQ hcat(const MatQ& a, const MatQ& b);
MatQ vcat(const MatQ& a, const MatQ& b);
MatQ vcat(const std::vector<MatQ>& blocks);

/// Subspace of Q(i)^ambient_dim spanned by the columns of `basis`
/// (column-echelon, leftmost-pivot convention, hence a canonical basis).
struct Subspace {
  Eigen::Index ambient_dim = 0;
  MatQ basis;  // ambient_dim x dim, full column rank

  Eigen::Index dim() const { return basis.cols(); }
  static Subspace zero(Eigen::Index ambient) {
    return Subspace{ambient, zeros(ambient, 0)};
  }
  static Subspace full(Eigen::Index ambient) {
    return Subspace{ambient, identity(ambient)};
  }
  bool contains(const VecQ& v) const;
  bool contains(const Subspace& other) const;
};

struct RankKernel {
  Eigen::Index rank = 0;
  Subspace kernel;
};

/// Gauss-Jordan over Q(i). Pivots: leftmost column, then lowest row index.
/// Kernel basis comes out in reduced column-echelon form.
RankKernel rank_and_kernel(const MatQ& m);

Eigen::Index rank_of(const MatQ& m);

/// Exact solution of m x = b, pivot-only convention (free coordinates zero).
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);

/// Simultaneous solve for a matrix right-hand side; nullopt if any column is
/// inconsistent.
std::optional<MatQ> solve_matrix(const MatQ& m, const MatQ& rhs);

/// Canonical column-span basis (column echelon of m, zero columns dropped).
Subspace column_space(const MatQ& m);

struct QuotientCoords {
  Eigen::Index dim = 0;
  MatQ project;  // dim x ambient
  MatQ section;  // ambient x dim, project*section = I
};

/// Coordinates on ambient/killed: project annihilates `killed` exactly and
/// project∘section = I on the quotient.
QuotientCoords quotient_coords(Eigen::Index ambient_dim, const Subspace& killed);

Subspace intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);

/// Intersection of kernels of the given maps (all with the same domain).
Subspace kernel_of_stack(const std::vector<MatQ>& maps);

/// Per-degree workspace cap (env NC_MAX_DIM, default 20000). Computations
/// that would materialize a graded slice beyond this throw.
Eigen::Index workspace_cap();
void require_within_cap(Eigen::Index dim, const char* what);

}  // namespace ncdg
