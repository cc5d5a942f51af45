#include <ncdg/complex.hpp>

#include <bit>
#include <stdexcept>

namespace ncdg {

void CochainComplex::validate() const {
  const auto n = (Eigen::Index)dims.size();
  if ((Eigen::Index)d.size() + 1 < n)
    throw std::invalid_argument("complex: missing differentials");
  for (Eigen::Index k = 0; k + 1 < n; ++k)
    if (d[k].cols() != dims[k] || d[k].rows() != dims[k + 1])
      throw std::invalid_argument("complex: shape mismatch at degree " +
                                  std::to_string(k));
  for (Eigen::Index k = 0; k + 2 < n; ++k)
    if (!is_zero(MatQ(d[k + 1] * d[k])))
      throw std::invalid_argument("complex: d.d != 0 at degree " +
                                  std::to_string(k));
}

CohomologyDims cohomology_dims(const CochainComplex& c) {
  c.validate();
  CohomologyDims out;
  const auto top = c.top_degree();
  Eigen::Index prev_rank = 0;
  for (Eigen::Index n = 0; n <= top; ++n) {
    Eigen::Index ker;
    if (n < top) {
      auto rk = rank_and_kernel(c.d[n]);
      ker = rk.kernel.dim();
      out.h.push_back(ker - prev_rank);
      prev_rank = rk.rank;
    } else {
      // top degree: kernel unknown unless the complex terminates
      out.h.push_back(c.dims[top] - prev_rank);
      out.top_is_bound = !c.terminated;
    }
  }
  return out;
}

bool verify_homotopy(const CochainComplex& c, const std::vector<MatQ>& h,
                     Eigen::Index from_degree) {
  const auto top = c.top_degree();
  for (Eigen::Index n = from_degree; n <= top; ++n) {
    MatQ acc = zeros(c.dims[n], c.dims[n]);
    if (n >= 1) acc += c.d[n - 1] * h[n];
    if (n < top)
      acc += h[n + 1] * c.d[n];
    else if (!c.terminated)
      continue;  // cannot test the top identity without d_top
    if (acc != identity(c.dims[n])) return false;
  }
  return true;
}

VecQ GradedDiffAlgebra::mul(Eigen::Index p, Eigen::Index q, const VecQ& x,
                            const VecQ& y) const {
  const MatQ& t = product[p][q];
  VecQ xy = zerov(dims[p] * dims[q]);
  for (Eigen::Index i = 0; i < dims[p]; ++i)
    if (!x(i).is_zero())
      for (Eigen::Index j = 0; j < dims[q]; ++j)
        if (!y(j).is_zero()) xy(i * dims[q] + j) = x(i) * y(j);
  return t * xy;
}

VecQ GradedDiffAlgebra::apply_star(Eigen::Index n, const VecQ& v) const {
  VecQ c = v;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = c(i).conj();
  return star[n] * c;
}

CochainComplex GradedDiffAlgebra::complex() const {
  CochainComplex c;
  c.dims = dims;
  c.d = d;
  c.terminated = terminated;
  return c;
}

GdaReport check_gda(const GradedDiffAlgebra& g) {
  GdaReport rep;
  const Eigen::Index N = g.max_degree;
  if (g.prod_max < N) rep.truncated = true;

  // d^2 = 0
  for (Eigen::Index n = 0; n + 1 < N; ++n)
    if (!is_zero(MatQ(g.d[n + 1] * g.d[n]))) rep.d_squared_zero = false;

  // unit
  for (Eigen::Index q = 0; q <= std::min(g.prod_max, N); ++q) {
    const Eigen::Index dq = g.dims[q];
    for (Eigen::Index j = 0; j < dq; ++j) {
      VecQ e = zerov(dq);
      e(j) = GRat(1);
      if (g.mul(0, q, g.unit, e) != e || g.mul(q, 0, e, g.unit) != e) {
        rep.unit_ok = false;
        break;
      }
    }
  }

  // associativity on basis triples within the product cap
  for (Eigen::Index p = 0; p <= g.prod_max && rep.associative; ++p)
    for (Eigen::Index q = 0; p + q <= g.prod_max && rep.associative; ++q)
      for (Eigen::Index r = 0; p + q + r <= g.prod_max && rep.associative;
           ++r) {
        for (Eigen::Index i = 0; i < g.dims[p] && rep.associative; ++i)
          for (Eigen::Index j = 0; j < g.dims[q] && rep.associative; ++j) {
            VecQ ei = zerov(g.dims[p]);
            ei(i) = GRat(1);
            VecQ ej = zerov(g.dims[q]);
            ej(j) = GRat(1);
            VecQ eij = g.mul(p, q, ei, ej);
            for (Eigen::Index k = 0; k < g.dims[r]; ++k) {
              VecQ ek = zerov(g.dims[r]);
              ek(k) = GRat(1);
              VecQ lhs = g.mul(p + q, r, eij, ek);
              VecQ rhs = g.mul(p, q + r, ei, g.mul(q, r, ej, ek));
              if (lhs != rhs) {
                rep.associative = false;
                break;
              }
            }
          }
      }

  // antiderivation: d(xy) = dx.y + (-1)^p x.dy where everything exists
  for (Eigen::Index p = 0; p <= g.prod_max && rep.antiderivation; ++p)
    for (Eigen::Index q = 0; p + q <= g.prod_max && rep.antiderivation; ++q) {
      if (p + q >= N) continue;
      if (p + 1 + q > g.prod_max || p + q + 1 > g.prod_max) {
        rep.truncated = true;
        continue;
      }
      GRat sign = (p % 2 == 0) ? GRat(1) : GRat(-1);
      for (Eigen::Index i = 0; i < g.dims[p] && rep.antiderivation; ++i)
        for (Eigen::Index j = 0; j < g.dims[q]; ++j) {
          VecQ ei = zerov(g.dims[p]);
          ei(i) = GRat(1);
          VecQ ej = zerov(g.dims[q]);
          ej(j) = GRat(1);
          VecQ lhs = g.d[p + q] * g.mul(p, q, ei, ej);
          VecQ rhs = g.mul(p + 1, q, g.d[p] * ei, ej) +
                     g.mul(p, q + 1, ei, g.d[q] * ej) * sign;
          if (lhs != rhs) {
            rep.antiderivation = false;
            break;
          }
        }
    }

  if (g.has_star()) {
    // star is involutive, (xy)* = (-1)^{pq} y* x*, d(x*) = (dx)*
    for (Eigen::Index n = 0; n <= N && rep.star_ok; ++n) {
      MatQ ss = g.star[n] * conjugate(g.star[n]);
      if (ss != identity(g.dims[n])) rep.star_ok = false;
    }
    for (Eigen::Index n = 0; n + 1 <= N && rep.star_ok; ++n) {
      // d(x*) = (dx)*: d[n] star_n = star_{n+1} conj(d[n])
      if (MatQ(g.d[n] * g.star[n]) != MatQ(g.star[n + 1] * conjugate(g.d[n])))
        rep.star_ok = false;
    }
    for (Eigen::Index p = 0; p <= g.prod_max && rep.star_ok; ++p)
      for (Eigen::Index q = 0; p + q <= g.prod_max && rep.star_ok; ++q) {
        GRat sign = (p * q % 2 == 0) ? GRat(1) : GRat(-1);
        for (Eigen::Index i = 0; i < g.dims[p] && rep.star_ok; ++i)
          for (Eigen::Index j = 0; j < g.dims[q]; ++j) {
            VecQ ei = zerov(g.dims[p]);
            ei(i) = GRat(1);
            VecQ ej = zerov(g.dims[q]);
            ej(j) = GRat(1);
            VecQ lhs = g.apply_star(p + q, g.mul(p, q, ei, ej));
            VecQ rhs =
                g.mul(q, p, g.apply_star(q, ej), g.apply_star(p, ei)) * sign;
            if (lhs != rhs) {
              rep.star_ok = false;
              break;
            }
          }
      }
  }
  return rep;
}

MatQ OperationData::lie_derivative(const GradedDiffAlgebra& g, Eigen::Index X,
                                   Eigen::Index n) const {
  if (n >= g.max_degree)
    throw std::invalid_argument("lie_derivative: degree at truncation edge");
  MatQ L = i[X][n + 1] * g.d[n];
  if (n >= 1) L += g.d[n - 1] * i[X][n];
  return L;
}

OperationReport verify_operation(const GradedDiffAlgebra& g,
                                 const OperationData& op) {
  OperationReport rep;
  const Eigen::Index N = g.max_degree;
  const Eigen::Index r = op.lie.dim;
  if (g.prod_max < N) rep.truncated = true;

  // i_X is an antiderivation of degree -1:
  // i(xy) = i(x)y + (-1)^p x i(y)
  for (Eigen::Index X = 0; X < r && rep.i_antiderivation; ++X)
    for (Eigen::Index p = 0; p <= g.prod_max && rep.i_antiderivation; ++p)
      for (Eigen::Index q = 0; p + q <= g.prod_max; ++q) {
        if (p + q < 1) continue;
        if ((p >= 1 && p - 1 + q > g.prod_max) ||
            (q >= 1 && p + q - 1 > g.prod_max))
          continue;
        GRat sign = (p % 2 == 0) ? GRat(1) : GRat(-1);
        bool fail = false;
        for (Eigen::Index a = 0; a < g.dims[p] && !fail; ++a)
          for (Eigen::Index b = 0; b < g.dims[q]; ++b) {
            VecQ ea = zerov(g.dims[p]);
            ea(a) = GRat(1);
            VecQ eb = zerov(g.dims[q]);
            eb(b) = GRat(1);
            VecQ lhs = op.i[X][p + q] * g.mul(p, q, ea, eb);
            VecQ rhs = zerov(g.dims[p + q - 1]);
            if (p >= 1) rhs += g.mul(p - 1, q, op.i[X][p] * ea, eb);
            if (q >= 1) rhs += g.mul(p, q - 1, ea, op.i[X][q] * eb) * sign;
            if (lhs != rhs) {
              fail = true;
              break;
            }
          }
        if (fail) rep.i_antiderivation = false;
      }

  // i_X i_Y + i_Y i_X = 0
  for (Eigen::Index X = 0; X < r && rep.anticommute; ++X)
    for (Eigen::Index Y = X; Y < r && rep.anticommute; ++Y)
      for (Eigen::Index n = 2; n <= N; ++n) {
        MatQ s = op.i[X][n - 1] * op.i[Y][n] + op.i[Y][n - 1] * op.i[X][n];
        if (!is_zero(s)) {
          rep.anticommute = false;
          break;
        }
      }

  // L_X i_Y - i_Y L_X = i_{[X,Y]} on degrees 1..N-1
  for (Eigen::Index X = 0; X < r && rep.equivariance; ++X)
    for (Eigen::Index Y = 0; Y < r && rep.equivariance; ++Y) {
      VecQ br = op.lie.bracket[X].col(Y);
      for (Eigen::Index n = 1; n + 1 <= N; ++n) {
        MatQ lhs = op.lie_derivative(g, X, n - 1) * op.i[Y][n] -
                   op.i[Y][n] * op.lie_derivative(g, X, n);
        MatQ rhs = zeros(g.dims[n - 1], g.dims[n]);
        for (Eigen::Index k = 0; k < r; ++k)
          if (!br(k).is_zero()) rhs += op.i[k][n] * br(k);
        if (lhs != rhs) {
          rep.equivariance = false;
          break;
        }
      }
    }

  // derived: [L_X, L_Y] = L_{[X,Y]} and L_X d = d L_X on degrees < N-1
  for (Eigen::Index X = 0; X < r && rep.l_homomorphism; ++X)
    for (Eigen::Index Y = 0; Y < r && rep.l_homomorphism; ++Y) {
      VecQ br = op.lie.bracket[X].col(Y);
      for (Eigen::Index n = 0; n + 1 < N; ++n) {
        MatQ lhs = op.lie_derivative(g, X, n) * op.lie_derivative(g, Y, n) -
                   op.lie_derivative(g, Y, n) * op.lie_derivative(g, X, n);
        MatQ rhs = zeros(g.dims[n], g.dims[n]);
        for (Eigen::Index k = 0; k < r; ++k)
          if (!br(k).is_zero()) rhs += op.lie_derivative(g, k, n) * br(k);
        if (lhs != rhs) {
          rep.l_homomorphism = false;
          break;
        }
      }
    }
  for (Eigen::Index X = 0; X < r && rep.l_commutes_d; ++X)
    for (Eigen::Index n = 0; n + 1 < N; ++n) {
      if (MatQ(g.d[n] * op.lie_derivative(g, X, n)) !=
          MatQ(op.lie_derivative(g, X, n + 1) * g.d[n])) {
        rep.l_commutes_d = false;
        break;
      }
    }
  return rep;
}

namespace {

SubComplex subcomplex_from_constraints(const GradedDiffAlgebra& g,
                                       const OperationData& op,
                                       bool horizontal, bool invariant) {
  const Eigen::Index N = g.max_degree;
  const Eigen::Index r = op.lie.dim;
  SubComplex out;
  for (Eigen::Index n = 0; n + 1 <= N; ++n) {
    std::vector<MatQ> cons;
    if (horizontal && n >= 1)
      for (Eigen::Index X = 0; X < r; ++X) cons.push_back(op.i[X][n]);
    if (invariant)
      for (Eigen::Index X = 0; X < r; ++X)
        cons.push_back(op.lie_derivative(g, X, n));
    Subspace s =
        cons.empty() ? Subspace::full(g.dims[n]) : kernel_of_stack(cons);
    out.sub.push_back(std::move(s));
  }
  out.restricted.dims.resize(out.sub.size());
  for (size_t n = 0; n < out.sub.size(); ++n)
    out.restricted.dims[n] = out.sub[n].dim();
  for (size_t n = 0; n + 1 < out.sub.size(); ++n) {
    MatQ image = g.d[n] * out.sub[n].basis;
    auto expr = solve_matrix(out.sub[n + 1].basis, image);
    if (!expr)
      throw std::runtime_error(
          "subcomplex: d does not preserve the computed subspace at degree " +
          std::to_string(n));
    out.restricted.d.push_back(std::move(*expr));
  }
  out.restricted.terminated = false;
  return out;
}

std::vector<Eigen::Index> subcomplex_cohomology(const GradedDiffAlgebra& g,
                                                const OperationData& op,
                                                Eigen::Index upto,
                                                bool horizontal) {
  if (upto + 1 > g.max_degree)
    throw std::invalid_argument(
        "subcomplex cohomology: need max_degree >= upto + 1");
  SubComplex sc = subcomplex_from_constraints(g, op, horizontal, true);
  std::vector<Eigen::Index> h;
  Eigen::Index prev_rank = 0;
  for (Eigen::Index n = 0; n <= upto; ++n) {
    // d restricted to the subspace, target in ambient coordinates
    MatQ dn = g.d[n] * sc.sub[n].basis;
    auto rk = rank_and_kernel(dn);
    h.push_back(rk.kernel.dim() - prev_rank);
    prev_rank = rk.rank;
  }
  return h;
}

}  // namespace

SubComplex basic_subcomplex(const GradedDiffAlgebra& g,
                            const OperationData& op) {
  return subcomplex_from_constraints(g, op, true, true);
}

SubComplex invariant_subcomplex(const GradedDiffAlgebra& g,
                                const OperationData& op) {
  return subcomplex_from_constraints(g, op, false, true);
}

std::vector<Subspace> horizontal_subspaces(const GradedDiffAlgebra& g,
                                           const OperationData& op) {
  std::vector<Subspace> out;
  for (Eigen::Index n = 0; n <= g.max_degree; ++n) {
    if (n == 0) {
      out.push_back(Subspace::full(g.dims[0]));
      continue;
    }
    std::vector<MatQ> cons;
    for (Eigen::Index X = 0; X < op.lie.dim; ++X) cons.push_back(op.i[X][n]);
    out.push_back(kernel_of_stack(cons));
  }
  return out;
}

std::vector<Eigen::Index> basic_cohomology(const GradedDiffAlgebra& g,
                                           const OperationData& op,
                                           Eigen::Index upto) {
  return subcomplex_cohomology(g, op, upto, true);
}

std::vector<Eigen::Index> invariant_cohomology(const GradedDiffAlgebra& g,
                                               const OperationData& op,
                                               Eigen::Index upto) {
  return subcomplex_cohomology(g, op, upto, false);
}

GradedDiffAlgebra gda_tensor(const GradedDiffAlgebra& a,
                             const GradedDiffAlgebra& b) {
  GradedDiffAlgebra t;
  t.max_degree = a.terminated && b.terminated
                     ? a.max_degree + b.max_degree
                     : std::min(a.max_degree, b.max_degree);
  t.terminated = a.terminated && b.terminated;
  t.prod_max = std::min({a.prod_max + (b.terminated ? b.max_degree : 0),
                         b.prod_max + (a.terminated ? a.max_degree : 0),
                         t.max_degree});
  if (!a.terminated || !b.terminated)
    t.prod_max = std::min(a.prod_max, b.prod_max);

  auto adim = [&](Eigen::Index p) {
    return p <= a.max_degree ? a.dims[p] : 0;
  };
  auto bdim = [&](Eigen::Index q) {
    return q <= b.max_degree ? b.dims[q] : 0;
  };
  // block offsets: degree n lists p from 0..n, block (p, n-p)
  std::vector<std::vector<Eigen::Index>> off(t.max_degree + 1);
  t.dims.assign(t.max_degree + 1, 0);
  for (Eigen::Index n = 0; n <= t.max_degree; ++n) {
    off[n].assign(n + 2, 0);
    Eigen::Index acc = 0;
    for (Eigen::Index p = 0; p <= n; ++p) {
      off[n][p] = acc;
      acc += adim(p) * bdim(n - p);
    }
    off[n][n + 1] = acc;
    t.dims[n] = acc;
  }

  // differential
  for (Eigen::Index n = 0; n + 1 <= t.max_degree; ++n) {
    MatQ dn = zeros(t.dims[n + 1], t.dims[n]);
    for (Eigen::Index p = 0; p <= n; ++p) {
      const Eigen::Index q = n - p;
      if (adim(p) * bdim(q) == 0) continue;
      GRat sgn = (p % 2 == 0) ? GRat(1) : GRat(-1);
      for (Eigen::Index i = 0; i < adim(p); ++i)
        for (Eigen::Index j = 0; j < bdim(q); ++j) {
          Eigen::Index colv = off[n][p] + i * bdim(q) + j;
          if (p + 1 <= a.max_degree && adim(p + 1) > 0 && p < a.max_degree) {
            const MatQ& da = a.d[p];
            for (Eigen::Index k = 0; k < adim(p + 1); ++k)
              if (!da(k, i).is_zero())
                dn(off[n + 1][p + 1] + k * bdim(q) + j, colv) += da(k, i);
          }
          if (q < b.max_degree && bdim(q + 1) > 0) {
            const MatQ& db = b.d[q];
            for (Eigen::Index k = 0; k < bdim(q + 1); ++k)
              if (!db(k, j).is_zero())
                dn(off[n + 1][p] + i * bdim(q + 1) + k, colv) += sgn * db(k, j);
          }
        }
    }
    t.d.push_back(std::move(dn));
  }

  // products
  t.product.assign(t.prod_max + 1, {});
  for (Eigen::Index m = 0; m <= t.prod_max; ++m) {
    t.product[m].resize(t.prod_max - m + 1);
    for (Eigen::Index n = 0; m + n <= t.prod_max; ++n) {
      MatQ prod = zeros(t.dims[m + n], t.dims[m] * t.dims[n]);
      for (Eigen::Index p = 0; p <= m; ++p) {
        Eigen::Index pp = m - p;  // second grading of x
        if (adim(p) * bdim(pp) == 0) continue;
        for (Eigen::Index q = 0; q <= n; ++q) {
          Eigen::Index qq = n - q;
          if (adim(q) * bdim(qq) == 0) continue;
          if (p + q > a.prod_max || pp + qq > b.prod_max) continue;
          if (p + q > a.max_degree || pp + qq > b.max_degree) continue;
          if (adim(p + q) * bdim(pp + qq) == 0) continue;
          GRat sgn = (pp * q % 2 == 0) ? GRat(1) : GRat(-1);
          const MatQ& pa = a.product[p][q];
          const MatQ& pb = b.product[pp][qq];
          for (Eigen::Index i = 0; i < adim(p); ++i)
            for (Eigen::Index j = 0; j < bdim(pp); ++j)
              for (Eigen::Index k = 0; k < adim(q); ++k)
                for (Eigen::Index l = 0; l < bdim(qq); ++l) {
                  Eigen::Index colx = off[m][p] + i * bdim(pp) + j;
                  Eigen::Index coly = off[n][q] + k * bdim(qq) + l;
                  // xy coordinates: pa column (i,k), pb column (j,l)
                  for (Eigen::Index u = 0; u < adim(p + q); ++u) {
                    const GRat& ca = pa(u, i * adim(q) + k);
                    if (ca.is_zero()) continue;
                    for (Eigen::Index v = 0; v < bdim(pp + qq); ++v) {
                      const GRat& cb = pb(v, j * bdim(qq) + l);
                      if (cb.is_zero()) continue;
                      prod(off[m + n][p + q] + u * bdim(pp + qq) + v,
                           colx * t.dims[n] + coly) += sgn * ca * cb;
                    }
                  }
                }
        }
      }
      t.product[m][n] = std::move(prod);
    }
  }

  t.unit = zerov(t.dims[0]);
  // degree 0 block is (0,0)
  for (Eigen::Index i = 0; i < adim(0); ++i)
    for (Eigen::Index j = 0; j < bdim(0); ++j)
      t.unit(i * bdim(0) + j) = a.unit(i) * b.unit(j);
  return t;
}

bool kunneth_check(const GradedDiffAlgebra& g1, const GradedDiffAlgebra& g2,
                   Eigen::Index upto) {
  GradedDiffAlgebra t = gda_tensor(g1, g2);
  auto h1 = cohomology_dims(g1.complex());
  auto h2 = cohomology_dims(g2.complex());
  auto ht = cohomology_dims(t.complex());
  auto safe = [](const CohomologyDims& h, Eigen::Index n) -> Eigen::Index {
    if (n >= (Eigen::Index)h.h.size()) return 0;
    return h.h[n];
  };
  auto exact_through = [](const CohomologyDims& h,
                          const GradedDiffAlgebra& g) -> Eigen::Index {
    return g.terminated ? (Eigen::Index)h.h.size() - 1
                        : (Eigen::Index)h.h.size() - 2;
  };
  Eigen::Index lim = std::min(
      {upto, exact_through(ht, t),
       g1.terminated ? upto : exact_through(h1, g1),
       g2.terminated ? upto : exact_through(h2, g2)});
  for (Eigen::Index n = 0; n <= lim; ++n) {
    Eigen::Index sum = 0;
    for (Eigen::Index p = 0; p <= n; ++p) sum += safe(h1, p) * safe(h2, n - p);
    if (safe(ht, n) != sum) return false;
  }
  return true;
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace

Eigen::Index subset_rank(int n, const std::vector<int>& s) {
  // lexicographic rank of the ascending subset
  Eigen::Index rank = 0;
  int prev = -1;
  int k = (int)s.size();
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < s[pos]; ++v)
      rank += binom(n - v - 1, k - pos - 1);
    prev = s[pos];
  }
  return rank;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int sign = 1;
  for (std::uint32_t bb = b; bb; bb &= bb - 1) {
    int bit = std::countr_zero(bb);
    // count elements of a above this bit
    int above = std::popcount(a >> (bit + 1));
    if (above % 2) sign = -sign;
  }
  return sign;
}

std::uint32_t mask_of(const std::vector<int>& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= (1u << v);
  return m;
}

std::vector<int> unmask(std::uint32_t m) {
  std::vector<int> s;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) s.push_back(i);
  return s;
}

}  // namespace ncdg
