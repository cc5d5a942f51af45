#include <ncdg/algebra.hpp>

namespace ncdg {

VecQ FiniteAlgebra::basis_vec(Eigen::Index i) const {
  VecQ v = zerov(dim);
  v(i) = GRat(1);
  return v;
}

MatQ FiniteAlgebra::left_mult(const VecQ& x) const {
  MatQ m = zeros(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!x(i).is_zero()) m += mul[i] * x(i);
  return m;
}

MatQ FiniteAlgebra::right_mult(const VecQ& y) const {
  // (x*y)_k = sum_{i,j} x_i y_j c_{ij}^k; column i of the result is e_i*y.
  MatQ m = zeros(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m.col(i) = mul[i] * y;
  return m;
}

VecQ FiniteAlgebra::multiply(const VecQ& x, const VecQ& y) const {
  VecQ r = zerov(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!x(i).is_zero()) r += (mul[i] * y) * x(i);
  return r;
}

VecQ FiniteAlgebra::star(const VecQ& x) const {
  VecQ c = x;
  for (Eigen::Index i = 0; i < dim; ++i) c(i) = c(i).conj();
  return *star_mat * c;
}

VecQ LieAlgebraData::bra(const VecQ& x, const VecQ& y) const {
  VecQ r = zerov(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!x(i).is_zero()) r += (bracket[i] * y) * x(i);
  return r;
}

MatQ LieAlgebraData::ad(const VecQ& x) const {
  MatQ m = zeros(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!x(i).is_zero()) m += bracket[i] * x(i);
  return m;
}

MatQ Bimodule::left_act(const VecQ& a) const {
  MatQ m = zeros(dim, dim);
  for (Eigen::Index i = 0; i < (Eigen::Index)left.size(); ++i)
    if (!a(i).is_zero()) m += left[i] * a(i);
  return m;
}

MatQ Bimodule::right_act(const VecQ& b) const {
  MatQ m = zeros(dim, dim);
  for (Eigen::Index j = 0; j < (Eigen::Index)right.size(); ++j)
    if (!b(j).is_zero()) m += right[j] * b(j);
  return m;
}

MatQ kron(const MatQ& a, const MatQ& b) {
  MatQ r = zeros(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero())
            r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

FiniteAlgebra matrix_algebra(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("matrix_algebra: n must be >= 1");
  FiniteAlgebra a;
  a.dim = n * n;
  auto idx = [n](Eigen::Index i, Eigen::Index j) { return i * n + j; };
  a.mul.assign(a.dim, zeros(a.dim, a.dim));
  // e_{ij} e_{kl} = delta_{jk} e_{il}
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index l = 0; l < n; ++l)
        a.mul[idx(i, j)](idx(i, l), idx(j, l)) = GRat(1);
  a.unit = zerov(a.dim);
  for (Eigen::Index i = 0; i < n; ++i) a.unit(idx(i, i)) = GRat(1);
  MatQ s = zeros(a.dim, a.dim);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(idx(j, i), idx(i, j)) = GRat(1);
  a.star_mat = s;
  a.labels.resize(a.dim);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a.labels[idx(i, j)] =
          "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return a;
}

FiniteAlgebra truncated_poly(Eigen::Index k) {
  if (k < 1) throw std::invalid_argument("truncated_poly: k must be >= 1");
  FiniteAlgebra a;
  a.dim = k;
  a.mul.assign(k, zeros(k, k));
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (i + j < k) a.mul[i](i + j, j) = GRat(1);
  a.unit = zerov(k);
  a.unit(0) = GRat(1);
  a.star_mat = identity(k);
  a.labels.resize(k);
  for (Eigen::Index i = 0; i < k; ++i)
    a.labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  return a;
}

FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra s;
  s.dim = a.dim + b.dim;
  s.mul.assign(s.dim, zeros(s.dim, s.dim));
  for (Eigen::Index i = 0; i < a.dim; ++i)
    s.mul[i].block(0, 0, a.dim, a.dim) = a.mul[i];
  for (Eigen::Index i = 0; i < b.dim; ++i)
    s.mul[a.dim + i].block(a.dim, a.dim, b.dim, b.dim) = b.mul[i];
  s.unit = zerov(s.dim);
  s.unit.head(a.dim) = a.unit;
  s.unit.tail(b.dim) = b.unit;
  if (a.has_star() && b.has_star()) {
    MatQ st = zeros(s.dim, s.dim);
    st.block(0, 0, a.dim, a.dim) = *a.star_mat;
    st.block(a.dim, a.dim, b.dim, b.dim) = *b.star_mat;
    s.star_mat = st;
  }
  return s;
}

FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra t;
  t.dim = a.dim * b.dim;
  t.mul.assign(t.dim, zeros(t.dim, t.dim));
  for (Eigen::Index i = 0; i < a.dim; ++i)
    for (Eigen::Index j = 0; j < b.dim; ++j)
      t.mul[flat2(i, j, b.dim)] = kron(a.mul[i], b.mul[j]);
  t.unit = kron(a.unit, b.unit);
  if (a.has_star() && b.has_star()) t.star_mat = kron(*a.star_mat, *b.star_mat);
  return t;
}

// d on C^1 = A* from minus the dual of the product, extended one degree as
// an antiderivation of the tensor algebra T(A*); returns (D1, D2) with
// D1: A* -> (A(x)A)* and D2: (A(x)A)* -> (A(x)A(x)A)*.
std::pair<MatQ, MatQ> algebra_dual_d(const FiniteAlgebra& a) {
  const Eigen::Index n = a.dim;
  MatQ d1 = zeros(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const GRat& c = a.mul[i](k, j);
        if (!c.is_zero()) d1(flat2(i, j, n), k) -= c;
      }
  // d(w (x) h) = dw (x) h - w (x) dh on decomposables of degree 1+1.
  MatQ id = identity(n);
  MatQ d2 = kron(d1, id) - kron(id, d1);
  return {d1, d2};
}

std::pair<MatQ, MatQ> lie_dual_d(const LieAlgebraData& g) {
  const Eigen::Index n = g.dim;
  const Eigen::Index n2 = n * (n - 1) / 2;
  auto pidx = [n](Eigen::Index i, Eigen::Index j) {
    // i < j, lexicographic
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  // D1: Lambda^1 -> Lambda^2, (d w)(X_i, X_j) = -w([X_i, X_j])
  MatQ d1 = zeros(n2, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      VecQ br = g.bracket[i].col(j);  // [e_i, e_j]
      for (Eigen::Index k = 0; k < n; ++k)
        if (!br(k).is_zero()) d1(pidx(i, j), k) -= br(k);
    }
  // D2: Lambda^2 -> Lambda^3 via the Chevalley-Eilenberg sum with pi = 0:
  // (d h)(X_p, X_q, X_r) = -h([X_p,X_q], X_r) + h([X_p,X_r], X_q)
  //                        - h([X_q,X_r], X_p)
  Eigen::Index n3 = n * (n - 1) * (n - 2) / 6;
  std::vector<std::array<Eigen::Index, 3>> triples;
  triples.reserve(n3);
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q)
      for (Eigen::Index r = q + 1; r < n; ++r) triples.push_back({p, q, r});
  MatQ d2 = zeros(n3, n2);
  auto add_eval = [&](Eigen::Index row, const VecQ& x, Eigen::Index other,
                      const GRat& sgn_coeff) {
    // accumulate sgn * h(x, e_other) expanded over the Lambda^2 basis
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      if (x(k).is_zero() || k == other) continue;
      if (k < other)
        d2(row, pidx(k, other)) += sgn_coeff * x(k);
      else
        d2(row, pidx(other, k)) -= sgn_coeff * x(k);
    }
  };
  for (Eigen::Index t = 0; t < n3; ++t) {
    auto [p, q, r] = triples[t];
    add_eval(t, g.bracket[p].col(q), r, GRat(-1));
    add_eval(t, g.bracket[p].col(r), q, GRat(1));
    add_eval(t, g.bracket[q].col(r), p, GRat(-1));
  }
  return {d1, d2};
}

AlgebraReport check_algebra(const FiniteAlgebra& a) {
  AlgebraReport rep;
  const Eigen::Index n = a.dim;
  if (n == 0) throw std::invalid_argument("check_algebra: empty algebra");
  for (auto& m : a.mul)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("check_algebra: tensor shape mismatch");

  rep.associative_direct = true;
  for (Eigen::Index i = 0; i < n && rep.associative_direct; ++i)
    for (Eigen::Index j = 0; j < n && rep.associative_direct; ++j) {
      VecQ eij = a.mul[i].col(j);
      for (Eigen::Index k = 0; k < n; ++k) {
        VecQ lhs = a.multiply(eij, a.basis_vec(k));
        VecQ rhs = a.mul[i] * a.mul[j].col(k);
        if (lhs != rhs) {
          rep.associative_direct = false;
          break;
        }
      }
    }

  auto [d1, d2] = algebra_dual_d(a);
  rep.associative_d2 = is_zero(MatQ(d2 * d1));
  rep.routes_agree = (rep.associative_direct == rep.associative_d2);

  rep.unit_ok = true;
  for (Eigen::Index k = 0; k < n; ++k) {
    VecQ e = a.basis_vec(k);
    if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e) {
      rep.unit_ok = false;
      break;
    }
  }

  if (a.has_star()) {
    rep.star_ok = true;
    for (Eigen::Index k = 0; k < n && rep.star_ok; ++k) {
      VecQ e = a.basis_vec(k);
      if (a.star(a.star(e)) != e) rep.star_ok = false;
      // (e_k e_j)* = e_j* e_k*
      for (Eigen::Index j = 0; j < n; ++j) {
        if (a.star(a.multiply(e, a.basis_vec(j))) !=
            a.multiply(a.star(a.basis_vec(j)), a.star(e))) {
          rep.star_ok = false;
          break;
        }
      }
    }
  }
  return rep;
}

LieReport check_lie(const LieAlgebraData& g) {
  LieReport rep;
  const Eigen::Index n = g.dim;
  rep.antisymmetric = true;
  for (Eigen::Index i = 0; i < n && rep.antisymmetric; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      VecQ bij = g.bracket[i].col(j);
      VecQ bji = g.bracket[j].col(i);
      if (bij != VecQ(-bji)) {
        rep.antisymmetric = false;
        break;
      }
    }
  if (!rep.antisymmetric)
    throw std::invalid_argument("check_lie: bracket not antisymmetric");

  rep.jacobi_direct = true;
  for (Eigen::Index i = 0; i < n && rep.jacobi_direct; ++i)
    for (Eigen::Index j = i + 1; j < n && rep.jacobi_direct; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k) {
        VecQ s = g.bra(g.bracket[i].col(j), g.basis_vec(k)) +
                 g.bra(g.bracket[j].col(k), g.basis_vec(i)) +
                 g.bra(g.bracket[k].col(i), g.basis_vec(j));
        if (!is_zero(MatQ(s))) {
          rep.jacobi_direct = false;
          break;
        }
      }

  auto [d1, d2] = lie_dual_d(g);
  rep.jacobi_d2 = is_zero(MatQ(d2 * d1));
  rep.routes_agree = (rep.jacobi_direct == rep.jacobi_d2);
  return rep;
}

Subspace center(const FiniteAlgebra& a) {
  std::vector<MatQ> constraints;
  for (Eigen::Index j = 0; j < a.dim; ++j) {
    // z e_j - e_j z = (R_j - L_j) z
    constraints.push_back(a.right_mult(a.basis_vec(j)) -
                          a.left_mult(a.basis_vec(j)));
  }
  return kernel_of_stack(constraints);
}

DerivationsResult derivations(const FiniteAlgebra& a) {
  const Eigen::Index n = a.dim;
  // Unknown X as n^2 vector, column-major: X(r, c) = v[c*n + r].
  // Constraint per (i, j): X(e_i e_j) - X(e_i) e_j - e_i X(e_j) = 0.
  MatQ cons = zeros(n * n * n, n * n);
  Eigen::Index row0 = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j, row0 += n) {
      VecQ prod = a.mul[i].col(j);
      MatQ li = a.left_mult(a.basis_vec(i));
      MatQ rj = a.right_mult(a.basis_vec(j));
      for (Eigen::Index c = 0; c < n; ++c) {
        // contribution of column c of X
        // X(e_i e_j) picks column via prod(c); X(e_i) uses c == i, X(e_j) c == j
        for (Eigen::Index r = 0; r < n; ++r) {
          GRat v(0);
          if (!prod(c).is_zero()) v += prod(c) * GRat(1);
          // entry multiplies X(r, c) -> rows r of value space shifted below
          if (!v.is_zero()) cons(row0 + r, c * n + r) += v;
        }
        if (c == i)
          for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index s = 0; s < n; ++s)
              if (!rj(r, s).is_zero()) cons(row0 + r, c * n + s) -= rj(r, s);
        if (c == j)
          for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index s = 0; s < n; ++s)
              if (!li(r, s).is_zero()) cons(row0 + r, c * n + s) -= li(r, s);
      }
    }
  }
  DerivationsResult out;
  out.der = rank_and_kernel(cons).kernel;
  MatQ inner_gens = zeros(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    MatQ ad = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
    for (Eigen::Index c = 0; c < n; ++c)
      for (Eigen::Index r = 0; r < n; ++r) inner_gens(c * n + r, i) = ad(r, c);
  }
  out.inner = column_space(inner_gens);
  if (!out.der.contains(out.inner))
    throw std::logic_error("derivations: inner derivations escaped the solve");
  out.out_dim = out.der.dim() - out.inner.dim();
  return out;
}

LieAlgebraData commutator_lie(const FiniteAlgebra& a) {
  LieAlgebraData g;
  g.dim = a.dim;
  g.bracket.resize(a.dim);
  for (Eigen::Index i = 0; i < a.dim; ++i)
    g.bracket[i] = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
  g.labels = a.labels;
  return g;
}

LieAlgebraData sl2() {
  LieAlgebraData g;
  g.dim = 3;
  g.bracket.assign(3, zeros(3, 3));
  // basis order: h, e, f
  g.bracket[0](1, 1) = GRat(2);   // [h,e] = 2e
  g.bracket[0](2, 2) = GRat(-2);  // [h,f] = -2f
  g.bracket[1](1, 0) = GRat(-2);  // [e,h] = -2e
  g.bracket[1](0, 2) = GRat(1);   // [e,f] = h
  g.bracket[2](2, 0) = GRat(2);   // [f,h] = 2f
  g.bracket[2](0, 1) = GRat(-1);  // [f,e] = -h
  g.labels = {"h", "e", "f"};
  return g;
}

LieAlgebraData abelian_lie(Eigen::Index n) {
  LieAlgebraData g;
  g.dim = n;
  g.bracket.assign(n, zeros(n, n));
  return g;
}

LieAlgebraData lie_from_matrices(const std::vector<MatQ>& mats,
                                 Eigen::Index source_dim) {
  const Eigen::Index r = (Eigen::Index)mats.size();
  LieAlgebraData g;
  g.dim = r;
  g.bracket.assign(r, zeros(r, r));
  // Express pairwise commutators in the given basis.
  MatQ flat = zeros(source_dim * source_dim, r);
  for (Eigen::Index k = 0; k < r; ++k)
    for (Eigen::Index c = 0; c < source_dim; ++c)
      for (Eigen::Index rr = 0; rr < source_dim; ++rr)
        flat(c * source_dim + rr, k) = mats[k](rr, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      MatQ com = mats[i] * mats[j] - mats[j] * mats[i];
      VecQ v = zerov(source_dim * source_dim);
      for (Eigen::Index c = 0; c < source_dim; ++c)
        for (Eigen::Index rr = 0; rr < source_dim; ++rr)
          v(c * source_dim + rr) = com(rr, c);
      auto x = solve(flat, v);
      if (!x)
        throw std::invalid_argument(
            "lie_from_matrices: commutator escapes the span");
      for (Eigen::Index k = 0; k < r; ++k) g.bracket[i](k, j) = (*x)(k);
    }
  return g;
}

MatQ derivation_star(const FiniteAlgebra& a, const MatQ& X) {
  if (!a.has_star()) throw std::invalid_argument("derivation_star: no star");
  const MatQ& s = *a.star_mat;
  return s * conjugate(X * s);
}

bool check_bimodule(const Bimodule& m) {
  const FiniteAlgebra& A = *m.left_algebra;
  const FiniteAlgebra& B = *m.right_algebra;
  for (Eigen::Index i = 0; i < A.dim; ++i)
    for (Eigen::Index j = 0; j < A.dim; ++j) {
      // (e_i e_j) v = e_i (e_j v)
      MatQ lhs = m.left_act(A.mul[i].col(j));
      if (lhs != MatQ(m.left[i] * m.left[j])) return false;
    }
  for (Eigen::Index i = 0; i < B.dim; ++i)
    for (Eigen::Index j = 0; j < B.dim; ++j) {
      // v (e_i e_j) = (v e_i) e_j
      MatQ rhs = m.right_act(B.mul[i].col(j));
      if (rhs != MatQ(m.right[j] * m.right[i])) return false;
    }
  for (Eigen::Index i = 0; i < A.dim; ++i)
    for (Eigen::Index j = 0; j < B.dim; ++j)
      if (MatQ(m.right[j] * m.left[i]) != MatQ(m.left[i] * m.right[j]))
        return false;
  if (m.left_act(A.unit) != identity(m.dim)) return false;
  if (m.right_act(B.unit) != identity(m.dim)) return false;
  return true;
}

bool check_star_bimodule(const StarBimodule& m) {
  const FiniteAlgebra& A = *m.base.left_algebra;
  if (!A.has_star()) return false;
  const MatQ& T = m.star_mat;
  if (MatQ(T * conjugate(T)) != identity(m.base.dim)) return false;
  // (x v y)* = y* v* x* on basis triples
  for (Eigen::Index i = 0; i < A.dim; ++i)
    for (Eigen::Index j = 0; j < A.dim; ++j) {
      VecQ xs = A.star(A.basis_vec(i));
      VecQ ys = A.star(A.basis_vec(j));
      // star(L_i R_j v) = L(y*) R(x*) star(v):
      // T conj(L_i R_j) = L(y*) R(x*) T
      MatQ lhs = T * conjugate(MatQ(m.base.left[i] * m.base.right[j]));
      MatQ rhs = m.base.left_act(ys) * m.base.right_act(xs) * T;
      if (lhs != rhs) return false;
    }
  return true;
}

Bimodule regular_bimodule(const FiniteAlgebra& a) {
  Bimodule m;
  m.left_algebra = &a;
  m.right_algebra = &a;
  m.dim = a.dim;
  m.left.resize(a.dim);
  m.right.resize(a.dim);
  for (Eigen::Index i = 0; i < a.dim; ++i) {
    m.left[i] = a.left_mult(a.basis_vec(i));
    m.right[i] = a.right_mult(a.basis_vec(i));
  }
  return m;
}

Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n) {
  Bimodule t;
  t.left_algebra = m.left_algebra;
  t.right_algebra = n.right_algebra;
  t.dim = m.dim * n.dim;
  MatQ im = identity(m.dim), in = identity(n.dim);
  for (auto& l : m.left) t.left.push_back(kron(l, in));
  for (auto& r : n.right) t.right.push_back(kron(im, r));
  return t;
}

TensorOverA tensor_over_algebra(const Bimodule& m, const Bimodule& n) {
  if (m.right_algebra != n.left_algebra)
    throw std::invalid_argument("tensor_over_algebra: middle algebra mismatch");
  const FiniteAlgebra& A = *m.right_algebra;
  Bimodule big = tensor_bimodule(m, n);
  MatQ in = identity(n.dim), im = identity(m.dim);
  // relators (v a)(x) w - v (x)(a w) over basis a, spanning columns
  MatQ rel = zeros(big.dim, A.dim * big.dim);
  Eigen::Index cc = 0;
  for (Eigen::Index ai = 0; ai < A.dim; ++ai) {
    MatQ r = kron(m.right[ai], in) - kron(im, n.left[ai]);
    rel.block(0, cc, big.dim, big.dim) = r;
    cc += big.dim;
  }
  TensorOverA out;
  out.coords = quotient_coords(big.dim, column_space(rel));
  out.quotient.left_algebra = big.left_algebra;
  out.quotient.right_algebra = big.right_algebra;
  out.quotient.dim = out.coords.dim;
  for (auto& l : big.left)
    out.quotient.left.push_back(out.coords.project * l * out.coords.section);
  for (auto& r : big.right)
    out.quotient.right.push_back(out.coords.project * r * out.coords.section);
  return out;
}

}  // namespace ncdg
