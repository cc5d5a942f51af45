#include <ncdg/hochschild.hpp>

#include <numeric>

namespace ncdg {

namespace {

Eigen::Index ipow(Eigen::Index b, Eigen::Index e) {
  Eigen::Index r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// enumerate tuples (t_1..t_n) over {0..a-1}, leftmost slowest
struct TupleIter {
  Eigen::Index a, n;
  std::vector<Eigen::Index> t;
  bool done = false;
  TupleIter(Eigen::Index a_, Eigen::Index n_) : a(a_), n(n_), t(n_, 0) {
    if (n_ < 0) done = true;
  }
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (auto v : t) r = r * a + v;
    return r;
  }
  void next() {
    Eigen::Index i = n - 1;
    while (i >= 0 && t[i] == a - 1) t[i--] = 0;
    if (i < 0) {
      done = true;
      return;
    }
    ++t[i];
  }
};

}  // namespace

Eigen::Index hochschild_dim(Eigen::Index adim, Eigen::Index mdim,
                            Eigen::Index n) {
  return mdim * ipow(adim, n);
}

MatQ hochschild_d_matrix(const FiniteAlgebra& a, const Bimodule& m,
                         Eigen::Index n) {
  const Eigen::Index ad = a.dim, md = m.dim;
  const Eigen::Index rows = hochschild_dim(ad, md, n + 1);
  const Eigen::Index cols = hochschild_dim(ad, md, n);
  require_within_cap(rows, "hochschild_d");
  MatQ d = zeros(rows, cols);
  for (TupleIter T(ad, n + 1); !T.done; T.next()) {
    const auto& t = T.t;
    const Eigen::Index rowbase = T.rank() * md;
    // x_0 w(x_1..x_n)
    {
      Eigen::Index src = 0;
      for (Eigen::Index k = 1; k <= n; ++k) src = src * ad + t[k];
      const MatQ& act = m.left[t[0]];
      for (Eigen::Index mo = 0; mo < md; ++mo)
        for (Eigen::Index mi = 0; mi < md; ++mi)
          if (!act(mo, mi).is_zero())
            d(rowbase + mo, src * md + mi) += act(mo, mi);
    }
    // interior merges with sign (-1)^k
    for (Eigen::Index k = 1; k <= n; ++k) {
      GRat sgn(k % 2 == 0 ? 1 : -1);
      VecQ prod = a.mul[t[k - 1]].col(t[k]);
      for (Eigen::Index s = 0; s < ad; ++s) {
        if (prod(s).is_zero()) continue;
        Eigen::Index src = 0;
        for (Eigen::Index j = 0; j <= n; ++j) {
          if (j == k - 1) {
            src = src * ad + s;
            ++j;  // skip slot k
            continue;
          }
          src = src * ad + t[j];
        }
        for (Eigen::Index mo = 0; mo < md; ++mo)
          d(rowbase + mo, src * md + mo) += sgn * prod(s);
      }
    }
    // (-1)^{n+1} w(x_0..x_{n-1}) x_n
    {
      GRat sgn((n + 1) % 2 == 0 ? 1 : -1);
      Eigen::Index src = 0;
      for (Eigen::Index k = 0; k < n; ++k) src = src * ad + t[k];
      const MatQ& act = m.right[t[n]];
      for (Eigen::Index mo = 0; mo < md; ++mo)
        for (Eigen::Index mi = 0; mi < md; ++mi)
          if (!act(mo, mi).is_zero())
            d(rowbase + mo, src * md + mi) += sgn * act(mo, mi);
    }
  }
  return d;
}

Cochain hochschild_d(const FiniteAlgebra& a, const Bimodule& m,
                     const Cochain& w) {
  Cochain out;
  out.degree = w.degree + 1;
  out.adim = w.adim;
  out.mdim = w.mdim;
  out.values = hochschild_d_matrix(a, m, w.degree) * w.values;
  return out;
}

MatQ scalar_d_matrix(const FiniteAlgebra& a, Eigen::Index n) {
  const Eigen::Index ad = a.dim;
  const Eigen::Index rows = ipow(ad, n + 1), cols = ipow(ad, n);
  require_within_cap(rows, "scalar_d");
  MatQ d = zeros(rows, cols);
  for (TupleIter T(ad, n + 1); !T.done; T.next()) {
    const auto& t = T.t;
    for (Eigen::Index k = 1; k <= n; ++k) {
      GRat sgn(k % 2 == 0 ? 1 : -1);
      VecQ prod = a.mul[t[k - 1]].col(t[k]);
      for (Eigen::Index s = 0; s < ad; ++s) {
        if (prod(s).is_zero()) continue;
        Eigen::Index src = 0;
        for (Eigen::Index j = 0; j <= n; ++j) {
          if (j == k - 1) {
            src = src * ad + s;
            ++j;
            continue;
          }
          src = src * ad + t[j];
        }
        d(T.rank(), src) += sgn * prod(s);
      }
    }
  }
  return d;
}

Bimodule dual_bimodule(const FiniteAlgebra& a) {
  Bimodule m;
  m.left_algebra = &a;
  m.right_algebra = &a;
  m.dim = a.dim;
  for (Eigen::Index i = 0; i < a.dim; ++i) {
    // (x phi)(z) = phi(z x): left[x] = (right multiplication by x)^T
    m.left.push_back(a.right_mult(a.basis_vec(i)).transpose());
    // (phi x)(z) = phi(x z): right[x] = (left multiplication by x)^T
    m.right.push_back(a.left_mult(a.basis_vec(i)).transpose());
  }
  return m;
}

MatQ scalar_dh_matrix(const FiniteAlgebra& a, Eigen::Index n) {
  const Eigen::Index ad = a.dim;
  if (n == 0) return zeros(ad, 1);
  // Identify C^n(A) with C^{n-1}(A, A*) by reading the LAST argument as the
  // evaluation slot: w'(x_1..x_{n-1})(z) = w(x_1..x_{n-1}, z). With the
  // flat layout (tuple slow, value fast) this identification is the
  // identity on coordinates, so d_H transports verbatim. The first-slot
  // identification fails the intertwining C d = d_H C by a sign.
  Bimodule astar = dual_bimodule(a);
  return hochschild_d_matrix(a, astar, n - 1);
}

MatQ unit_insert_homotopy(const FiniteAlgebra& a, Eigen::Index n) {
  // h(w)(x_1..x_{n-1}) = -w(1l, x_1..x_{n-1}). The sign is forced: with the
  // merge differential normalized by d(w)(x,y) = -w(xy), plain unit
  // insertion satisfies dh + hd = -id, so the contraction is its negative.
  const Eigen::Index ad = a.dim;
  MatQ h = zeros(ipow(ad, n - 1), ipow(ad, n));
  for (TupleIter T(ad, n); !T.done; T.next()) {
    if (a.unit(T.t[0]).is_zero()) continue;
    Eigen::Index rest = 0;
    for (Eigen::Index k = 1; k < n; ++k) rest = rest * ad + T.t[k];
    h(rest, T.rank()) -= a.unit(T.t[0]);
  }
  return h;
}

CochainComplex scalar_complex(const FiniteAlgebra& a, Eigen::Index upto) {
  CochainComplex c;
  for (Eigen::Index n = 0; n <= upto; ++n) c.dims.push_back(ipow(a.dim, n));
  for (Eigen::Index n = 0; n + 1 <= upto; ++n)
    c.d.push_back(scalar_d_matrix(a, n));
  c.terminated = false;
  return c;
}

Subspace normalized_subspace(const FiniteAlgebra& a, const Bimodule& m,
                             Eigen::Index n) {
  const Eigen::Index ad = a.dim, md = m.dim;
  if (n == 0) return Subspace::full(md);
  std::vector<MatQ> evals;
  for (Eigen::Index p = 0; p < n; ++p) {
    // insert the unit into slot p of the argument tuple
    MatQ e = zeros(hochschild_dim(ad, md, n - 1), hochschild_dim(ad, md, n));
    for (TupleIter T(ad, n); !T.done; T.next()) {
      if (a.unit(T.t[p]).is_zero()) continue;
      Eigen::Index rest = 0;
      for (Eigen::Index k = 0; k < n; ++k)
        if (k != p) rest = rest * ad + T.t[k];
      for (Eigen::Index mo = 0; mo < md; ++mo)
        e(rest * md + mo, T.rank() * md + mo) += a.unit(T.t[p]);
    }
    evals.push_back(std::move(e));
  }
  return kernel_of_stack(evals);
}

HochschildCohomology hochschild_cohomology(const FiniteAlgebra& a,
                                           const Bimodule& m,
                                           Eigen::Index upto) {
  require_within_cap(hochschild_dim(a.dim, m.dim, upto + 1),
                     "hochschild_cohomology");
  HochschildCohomology out;
  std::vector<MatQ> d(upto + 1);
  for (Eigen::Index n = 0; n <= upto; ++n) d[n] = hochschild_d_matrix(a, m, n);
  Eigen::Index prev_rank = 0;
  for (Eigen::Index n = 0; n <= upto; ++n) {
    auto rk = rank_and_kernel(d[n]);
    out.dims.push_back(rk.kernel.dim() - prev_rank);
    prev_rank = rk.rank;
  }
  // normalized subcomplex: d restricted to the normalized rows
  prev_rank = 0;
  std::vector<Subspace> norm(upto + 2);
  for (Eigen::Index n = 0; n <= upto + 1; ++n)
    norm[n] = normalized_subspace(a, m, n);
  for (Eigen::Index n = 0; n <= upto; ++n) {
    MatQ dn = d[n] * norm[n].basis;
    // stability of the normalized rows under d_H
    if (!solve_matrix(norm[n + 1].basis, dn))
      throw std::logic_error("hochschild: normalized rows not d-stable");
    auto rk = rank_and_kernel(dn);
    out.normalized_dims.push_back(rk.kernel.dim() - prev_rank);
    prev_rank = rk.rank;
  }
  out.agree = (out.dims == out.normalized_dims);
  return out;
}

CupResult cup(const FiniteAlgebra& a, const Bimodule& m, const Bimodule& n,
              const Cochain& alpha, const Cochain& beta) {
  if (alpha.mdim != m.dim || beta.mdim != n.dim)
    throw std::invalid_argument("cup: bimodule mismatch");
  CupResult out;
  out.target = tensor_over_algebra(m, n);
  const Eigen::Index ad = a.dim;
  const Eigen::Index deg = alpha.degree + beta.degree;
  Cochain& c = out.product;
  c.degree = deg;
  c.adim = ad;
  c.mdim = out.target.quotient.dim;
  c.values = zerov(ipow(ad, deg) * c.mdim);
  for (TupleIter T(ad, deg); !T.done; T.next()) {
    Eigen::Index t1 = 0, t2 = 0;
    for (Eigen::Index k = 0; k < alpha.degree; ++k) t1 = t1 * ad + T.t[k];
    for (Eigen::Index k = alpha.degree; k < deg; ++k) t2 = t2 * ad + T.t[k];
    // alpha-value (x) beta-value, then project to M (x)_A N
    VecQ big = zerov(m.dim * n.dim);
    for (Eigen::Index i = 0; i < m.dim; ++i) {
      const GRat& av = alpha.values(t1 * m.dim + i);
      if (av.is_zero()) continue;
      for (Eigen::Index j = 0; j < n.dim; ++j) {
        const GRat& bv = beta.values(t2 * n.dim + j);
        if (!bv.is_zero()) big(i * n.dim + j) = av * bv;
      }
    }
    VecQ q = out.target.coords.project * big;
    for (Eigen::Index j = 0; j < c.mdim; ++j)
      c.values(T.rank() * c.mdim + j) = q(j);
  }
  return out;
}

MatQ antisymmetrize_matrix(const FiniteAlgebra& a, Eigen::Index n) {
  const Eigen::Index ad = a.dim;
  const Eigen::Index sz = ipow(ad, n);
  MatQ s = zeros(sz, sz);
  if (n == 0) {
    s(0, 0) = GRat(1);
    return s;
  }
  std::vector<Eigen::Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // signature by inversion count
    int inv = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    GRat sgn(inv % 2 == 0 ? 1 : -1);
    for (TupleIter T(ad, n); !T.done; T.next()) {
      Eigen::Index src = 0;
      for (Eigen::Index k = 0; k < n; ++k) src = src * ad + T.t[perm[k]];
      s(T.rank(), src) += sgn;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

MatQ cyclic_matrix(const FiniteAlgebra& a, Eigen::Index n) {
  const Eigen::Index ad = a.dim;
  const Eigen::Index sz = ipow(ad, n);
  MatQ c = zeros(sz, sz);
  if (n == 0) {
    c(0, 0) = GRat(1);
    return c;
  }
  // cyclic generator gamma = (1 2 .. n) has signature (-1)^{n-1}
  for (Eigen::Index j = 0; j < n; ++j) {
    GRat sgn(((n - 1) * j) % 2 == 0 ? 1 : -1);
    for (TupleIter T(ad, n); !T.done; T.next()) {
      Eigen::Index src = 0;
      for (Eigen::Index k = 0; k < n; ++k)
        src = src * ad + T.t[(k + j) % n];
      c(T.rank(), src) += sgn;
    }
  }
  return c;
}

CyclicCohomology cyclic_cohomology(const FiniteAlgebra& a, Eigen::Index upto) {
  require_within_cap(ipow(a.dim, upto + 1), "cyclic_cohomology");
  CyclicCohomology out;
  std::vector<Subspace> imc(upto + 2);
  for (Eigen::Index n = 0; n <= upto + 1; ++n)
    imc[n] = column_space(cyclic_matrix(a, n));
  for (Eigen::Index n = 0; n <= upto; ++n)
    out.im_c_dims.push_back(imc[n].dim());
  Eigen::Index prev_rank = 0;
  for (Eigen::Index n = 0; n <= upto; ++n) {
    MatQ dn = scalar_dh_matrix(a, n) * imc[n].basis;
    if (!solve_matrix(imc[n + 1].basis, dn))
      throw std::logic_error("cyclic: Im C not stable under d_H");
    auto rk = rank_and_kernel(dn);
    out.raw.push_back(rk.kernel.dim() - prev_rank);
    prev_rank = rk.rank;
  }
  return out;
}

ScalarCochainGda scalar_cochain_gda(const FiniteAlgebra& a,
                                    Eigen::Index max_degree,
                                    Eigen::Index prod_max) {
  const Eigen::Index ad = a.dim;
  require_within_cap(ipow(ad, max_degree), "scalar_cochain_gda");
  ScalarCochainGda out;
  GradedDiffAlgebra& g = out.gda;
  g.max_degree = max_degree;
  g.prod_max = std::min(prod_max, max_degree);
  for (Eigen::Index n = 0; n <= max_degree; ++n) g.dims.push_back(ipow(ad, n));
  for (Eigen::Index n = 0; n + 1 <= max_degree; ++n)
    g.d.push_back(scalar_d_matrix(a, n));
  // tensor concatenation product: identity under index flattening
  g.product.assign(g.prod_max + 1, {});
  for (Eigen::Index p = 0; p <= g.prod_max; ++p) {
    g.product[p].resize(g.prod_max - p + 1);
    for (Eigen::Index q = 0; p + q <= g.prod_max; ++q)
      g.product[p][q] = identity(g.dims[p + q]);
  }
  g.unit = zerov(1);
  g.unit(0) = GRat(1);
  g.terminated = false;

  out.op.lie = commutator_lie(a);
  out.op.i.assign(ad, {});
  for (Eigen::Index X = 0; X < ad; ++X) {
    out.op.i[X].resize(max_degree + 1);
    out.op.i[X][0] = zeros(0, 1);
    for (Eigen::Index n = 1; n <= max_degree; ++n) {
      MatQ ix = zeros(g.dims[n - 1], g.dims[n]);
      for (TupleIter S(ad, n - 1); !S.done; S.next()) {
        // insert X after position k of S (k = 0..n-1), sign (-1)^k
        for (Eigen::Index k = 0; k < n; ++k) {
          Eigen::Index src = 0;
          for (Eigen::Index j = 0; j < k; ++j) src = src * ad + S.t[j];
          src = src * ad + X;
          for (Eigen::Index j = k; j < n - 1; ++j) src = src * ad + S.t[j];
          ix(S.rank(), src) += GRat(k % 2 == 0 ? 1 : -1);
        }
      }
      out.op.i[X][n] = std::move(ix);
    }
  }
  return out;
}

std::vector<Eigen::Index> basic_cohomology_A(const FiniteAlgebra& a,
                                             Eigen::Index upto) {
  auto sc = scalar_cochain_gda(a, upto + 1, std::min<Eigen::Index>(upto, 2));
  return basic_cohomology(sc.gda, sc.op, upto);
}

}  // namespace ncdg
