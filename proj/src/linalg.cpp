#include <ncdg/linalg.hpp>

#include <ostream>
#include <cstdlib>
#include <sstream>

namespace ncdg {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      mpq_class q(n);
      q.canonicalize();
      return q;
    }
    mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: \"" + s + "\"");
  }
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_grat(const GRat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GRat& x) {
  if (x.is_real()) return os << format_rational(x.re);
  if (sgn(x.re) == 0) return os << format_rational(x.im) << "*i";
  return os << format_rational(x.re) << (sgn(x.im) > 0 ? "+" : "")
            << format_rational(x.im) << "*i";
}

MatQ hcat(const MatQ& a, const MatQ& b) {
  MatQ r = zeros(a.rows(), a.cols() + b.cols());
  r.block(0, 0, a.rows(), a.cols()) = a;
  r.block(0, a.cols(), b.rows(), b.cols()) = b;
  return r;
}

MatQ vcat(const MatQ& a, const MatQ& b) {
  MatQ r = zeros(a.rows() + b.rows(), a.cols());
  r.block(0, 0, a.rows(), a.cols()) = a;
  r.block(a.rows(), 0, b.rows(), b.cols()) = b;
  return r;
}

MatQ vcat(const std::vector<MatQ>& blocks) {
  Eigen::Index rows = 0, cols = blocks.empty() ? 0 : blocks[0].cols();
  for (auto& b : blocks) rows += b.rows();
  MatQ r = zeros(rows, cols);
  Eigen::Index at = 0;
  for (auto& b : blocks) {
    r.block(at, 0, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return r;
}

namespace {

// In-place row reduction to reduced row echelon form. Returns pivot columns.
// Pivot choice: for each column left to right, the first row (lowest index)
// among the unused ones with a nonzero entry. Zero tests skip arithmetic on
// the pervasive zero entries, which keeps elimination near the sparse cost.
std::vector<Eigen::Index> rref_inplace(MatQ& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (Eigen::Index j = c; j < cols; ++j) std::swap(m(r, j), m(pr, j));
    GRat inv = GRat(1) / m(r, c);
    m(r, c) = GRat(1);
    std::vector<Eigen::Index> row_nnz;
    for (Eigen::Index j = c + 1; j < cols; ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        row_nnz.push_back(j);
      }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GRat f = m(i, c);
      m(i, c) = GRat(0);
      for (Eigen::Index j : row_nnz) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

RankKernel rank_and_kernel(const MatQ& m) {
  MatQ red = m;
  std::vector<Eigen::Index> piv = rref_inplace(red);
  const Eigen::Index rank = (Eigen::Index)piv.size();
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  MatQ ker = zeros(cols, cols - rank);
  Eigen::Index kc = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    ker(c, kc) = GRat(1);
    for (Eigen::Index pi = 0; pi < rank; ++pi)
      if (!red(pi, c).is_zero()) ker(piv[pi], kc) = -red(pi, c);
    ++kc;
  }
  return RankKernel{rank, Subspace{cols, std::move(ker)}};
}

Eigen::Index rank_of(const MatQ& m) {
  MatQ red = m;
  return (Eigen::Index)rref_inplace(red).size();
}

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
  auto sol = solve_matrix(m, b);
  if (!sol) return std::nullopt;
  return VecQ(sol->col(0));
}

std::optional<MatQ> solve_matrix(const MatQ& m, const MatQ& rhs) {
  MatQ aug = hcat(m, rhs);
  std::vector<Eigen::Index> piv = rref_inplace(aug);
  const Eigen::Index n = m.cols();
  // Any pivot landing in the rhs block marks an inconsistent system.
  for (auto c : piv)
    if (c >= n) return std::nullopt;
  MatQ x = zeros(n, rhs.cols());
  for (Eigen::Index pi = 0; pi < (Eigen::Index)piv.size(); ++pi)
    for (Eigen::Index j = 0; j < rhs.cols(); ++j)
      x(piv[pi], j) = aug(pi, n + j);
  return x;
}

Subspace column_space(const MatQ& m) {
  // Column echelon = row echelon of the transpose, transposed back.
  MatQ t = m.transpose();
  std::vector<Eigen::Index> piv = rref_inplace(t);
  const Eigen::Index rank = (Eigen::Index)piv.size();
  MatQ basis = zeros(m.rows(), rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < m.rows(); ++j) basis(j, i) = t(i, j);
  return Subspace{m.rows(), std::move(basis)};
}

bool Subspace::contains(const VecQ& v) const {
  return solve_matrix(basis, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() == 0) return true;
  return solve_matrix(basis, other.basis).has_value();
}

QuotientCoords quotient_coords(Eigen::Index ambient_dim,
                               const Subspace& killed) {
  if (killed.ambient_dim != ambient_dim)
    throw std::invalid_argument("quotient_coords: ambient dimension mismatch");
  // Row reduce killed^T: pivot coordinates are the killed directions, the
  // free coordinates survive as quotient coordinates.
  MatQ t = killed.basis.transpose();
  std::vector<Eigen::Index> piv = rref_inplace(t);
  const Eigen::Index k = (Eigen::Index)piv.size();
  const Eigen::Index q = ambient_dim - k;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Eigen::Index> free_coords;
  for (Eigen::Index c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);
  QuotientCoords out;
  out.dim = q;
  out.project = zeros(q, ambient_dim);
  out.section = zeros(ambient_dim, q);
  for (Eigen::Index i = 0; i < q; ++i) {
    out.project(i, free_coords[i]) = GRat(1);
    out.section(free_coords[i], i) = GRat(1);
  }
  // Correct the projection so it annihilates killed: subtract, for each
  // pivot coordinate, the tail of its echelon row.
  for (Eigen::Index pi = 0; pi < k; ++pi) {
    // row pi of t: e_{piv[pi]} + sum over free coords
    for (Eigen::Index i = 0; i < q; ++i) {
      const GRat& c = t(pi, free_coords[i]);
      if (!c.is_zero()) out.project(i, piv[pi]) = -c;
    }
  }
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim);
  // Null space of [A | -B]: pairs (x, y) with A x = B y.
  MatQ stack = hcat(a.basis, b.basis * GRat(-1));
  auto rk = rank_and_kernel(stack);
  MatQ xpart = rk.kernel.basis.topRows(a.dim());
  return column_space(a.basis * xpart);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("sum: ambient dimension mismatch");
  return column_space(hcat(a.basis, b.basis));
}

Subspace kernel_of_stack(const std::vector<MatQ>& maps) {
  return rank_and_kernel(vcat(maps)).kernel;
}

Eigen::Index workspace_cap() {
  static Eigen::Index cap = [] {
    if (const char* s = std::getenv("NC_MAX_DIM")) {
      long v = std::atol(s);
      if (v > 0) return (Eigen::Index)v;
    }
    return (Eigen::Index)20000;
  }();
  return cap;
}

void require_within_cap(Eigen::Index dim, const char* what) {
  if (dim > workspace_cap())
    throw std::length_error(std::string(what) + ": slice dimension " +
                            std::to_string(dim) + " exceeds NC_MAX_DIM = " +
                            std::to_string(workspace_cap()));
}

}  // namespace ncdg
