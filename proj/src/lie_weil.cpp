#include <ncdg/lie_weil.hpp>

#include <bit>
#include <map>

namespace ncdg {

LieModule LieModule::trivial(const LieAlgebraData& g, Eigen::Index d) {
  LieModule m;
  m.lie = g;
  m.dim = d;
  m.action.assign(g.dim, zeros(d, d));
  return m;
}

LieModule LieModule::adjoint(const LieAlgebraData& g) {
  LieModule m;
  m.lie = g;
  m.dim = g.dim;
  m.action = g.bracket;
  return m;
}

bool LieModule::valid() const {
  for (Eigen::Index i = 0; i < lie.dim; ++i)
    for (Eigen::Index j = 0; j < lie.dim; ++j) {
      MatQ lhs = action[i] * action[j] - action[j] * action[i];
      VecQ br = lie.bracket[i].col(j);
      MatQ rhs = zeros(dim, dim);
      for (Eigen::Index k = 0; k < lie.dim; ++k)
        if (!br(k).is_zero()) rhs += action[k] * br(k);
      if (lhs != rhs) return false;
    }
  return true;
}

CochainComplex ce_complex(const LieAlgebraData& g, const LieModule& e,
                          Eigen::Index upto) {
  if (!e.valid()) throw std::invalid_argument("ce_complex: invalid module");
  const int r = (int)g.dim;
  const Eigen::Index N = std::min<Eigen::Index>(upto, r);
  CochainComplex c;
  std::vector<std::vector<std::vector<int>>> combos(N + 1);
  for (Eigen::Index n = 0; n <= N; ++n) {
    combos[n] = subsets_of(r, (int)n);
    c.dims.push_back((Eigen::Index)combos[n].size() * e.dim);
  }
  c.terminated = (upto >= r);
  for (Eigen::Index n = 0; n + 1 <= N; ++n) {
    MatQ dn = zeros(c.dims[n + 1], c.dims[n]);
    for (Eigen::Index ti = 0; ti < (Eigen::Index)combos[n + 1].size(); ++ti) {
      const auto& T = combos[n + 1][ti];
      // first sum: (-1)^k pi(X_{t_k}) w(T minus t_k)
      for (int k = 0; k <= (int)n; ++k) {
        std::vector<int> rest;
        for (int t = 0; t < (int)T.size(); ++t)
          if (t != k) rest.push_back(T[t]);
        Eigen::Index src = subset_rank(r, rest);
        GRat sgn(k % 2 == 0 ? 1 : -1);
        const MatQ& act = e.action[T[k]];
        for (Eigen::Index mo = 0; mo < e.dim; ++mo)
          for (Eigen::Index mi = 0; mi < e.dim; ++mi)
            if (!act(mo, mi).is_zero())
              dn(ti * e.dim + mo, src * e.dim + mi) += sgn * act(mo, mi);
      }
      // second sum: (-1)^{k+l} w([X_{t_k}, X_{t_l}], rest)
      for (int k = 0; k <= (int)n; ++k)
        for (int l = k + 1; l <= (int)n; ++l) {
          std::vector<int> rest;
          for (int t = 0; t < (int)T.size(); ++t)
            if (t != k && t != l) rest.push_back(T[t]);
          VecQ br = g.bracket[T[k]].col(T[l]);
          GRat sgn((k + l) % 2 == 0 ? 1 : -1);
          for (int m = 0; m < r; ++m) {
            if (br(m).is_zero()) continue;
            bool dup = false;
            int pos = 0;
            for (int v : rest) {
              if (v == m) { dup = true; break; }
              if (v < m) ++pos;
            }
            if (dup) continue;
            std::vector<int> s = rest;
            s.insert(s.begin() + pos, m);
            GRat ins(pos % 2 == 0 ? 1 : -1);
            Eigen::Index src = subset_rank(r, s);
            for (Eigen::Index mi = 0; mi < e.dim; ++mi)
              dn(ti * e.dim + mi, src * e.dim + mi) += sgn * ins * br(m);
          }
        }
    }
    c.d.push_back(std::move(dn));
  }
  return c;
}

Eigen::Index sym_dim(Eigen::Index vars, Eigen::Index n) {
  if (n == 0) return 1;
  long long r = 1;
  for (Eigen::Index i = 0; i < n; ++i) r = r * (vars + n - 1 - i) / (i + 1);
  return (Eigen::Index)r;
}

namespace {

// Ascending multisets of size n over {0..r-1}, lexicographic.
std::vector<std::vector<int>> multisets_of(int r, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == r - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[i];
  }
  return out;
}

}  // namespace

Subspace invariant_polynomials(const LieAlgebraData& g, Eigen::Index n) {
  const int r = (int)g.dim;
  if (n == 0) return Subspace::full(1);
  auto monos = multisets_of(r, (int)n);
  std::map<std::vector<int>, Eigen::Index> index;
  for (Eigen::Index i = 0; i < (Eigen::Index)monos.size(); ++i)
    index[monos[i]] = i;
  const Eigen::Index dim = (Eigen::Index)monos.size();
  std::vector<MatQ> constraints;
  for (int j = 0; j < r; ++j) {
    // coadjoint: L_j x_i = -sum_k ad_j(i, k)? careful: x_i([X_j, Y]) picks
    // the i-coordinate of ad_j(Y): row i of ad_j. So L_j x_i = -sum_k
    // ad_j(i, k) x_k, extended as a derivation to monomials.
    MatQ L = zeros(dim, dim);
    const MatQ& ad = g.bracket[j];
    for (Eigen::Index mi = 0; mi < dim; ++mi) {
      const auto& M = monos[mi];
      for (int t = 0; t < (int)n; ++t) {
        int i = M[t];
        for (int k = 0; k < r; ++k) {
          if (ad(i, k).is_zero()) continue;
          std::vector<int> M2 = M;
          M2[t] = k;
          std::sort(M2.begin(), M2.end());
          L(index[M2], mi) -= ad(i, k);
        }
      }
    }
    constraints.push_back(std::move(L));
  }
  return kernel_of_stack(constraints);
}

GradedDiffAlgebra exterior_gda(const LieAlgebraData& g) {
  const int r = (int)g.dim;
  GradedDiffAlgebra w;
  w.max_degree = r;
  w.prod_max = r;
  w.terminated = true;
  std::vector<std::vector<std::vector<int>>> combos(r + 1);
  for (int n = 0; n <= r; ++n) {
    combos[n] = subsets_of(r, n);
    w.dims.push_back((Eigen::Index)combos[n].size());
  }
  CochainComplex ce = ce_complex(g, LieModule::trivial(g), r);
  w.d = ce.d;
  w.product.assign(r + 1, {});
  for (int p = 0; p <= r; ++p) {
    w.product[p].resize(r - p + 1);
    for (int q = 0; p + q <= r; ++q) {
      MatQ prod = zeros(w.dims[p + q], w.dims[p] * w.dims[q]);
      for (Eigen::Index i = 0; i < w.dims[p]; ++i) {
        std::uint32_t mi = mask_of(combos[p][i]);
        for (Eigen::Index j = 0; j < w.dims[q]; ++j) {
          std::uint32_t mj = mask_of(combos[q][j]);
          int s = merge_sign(mi, mj);
          if (s == 0) continue;
          prod(subset_rank(r, unmask(mi | mj)), i * w.dims[q] + j) = GRat(s);
        }
      }
      w.product[p][q] = std::move(prod);
    }
  }
  w.unit = zerov(1);
  w.unit(0) = GRat(1);
  return w;
}

CochainAlgebra cochain_algebra(const LieAlgebraData& g, const FiniteAlgebra& a,
                               const std::vector<MatQ>& action,
                               Eigen::Index max_degree) {
  const int r = (int)g.dim;
  const Eigen::Index ad = a.dim;
  const Eigen::Index N = std::min<Eigen::Index>(max_degree, r);
  CochainAlgebra out;
  GradedDiffAlgebra& w = out.gda;
  w.max_degree = N;
  w.prod_max = N;
  w.terminated = true;  // Lambda^n g* vanishes above dim g
  std::vector<std::vector<std::vector<int>>> combos(N + 1);
  for (Eigen::Index n = 0; n <= N; ++n) {
    combos[n] = subsets_of(r, (int)n);
    w.dims.push_back((Eigen::Index)combos[n].size() * ad);
  }
  LieModule mod;
  mod.lie = g;
  mod.dim = ad;
  mod.action = action;
  CochainComplex ce = ce_complex(g, mod, N);
  w.d = ce.d;
  w.product.assign(N + 1, {});
  for (Eigen::Index p = 0; p <= N; ++p) {
    w.product[p].resize(N - p + 1);
    for (Eigen::Index q = 0; p + q <= N; ++q) {
      MatQ prod = zeros(w.dims[p + q], w.dims[p] * w.dims[q]);
      for (Eigen::Index i = 0; i < (Eigen::Index)combos[p].size(); ++i) {
        std::uint32_t mi = mask_of(combos[p][i]);
        for (Eigen::Index j = 0; j < (Eigen::Index)combos[q].size(); ++j) {
          std::uint32_t mj = mask_of(combos[q][j]);
          int s = merge_sign(mi, mj);
          if (s == 0) continue;
          Eigen::Index tgt = subset_rank(r, unmask(mi | mj));
          for (Eigen::Index ai = 0; ai < ad; ++ai)
            for (Eigen::Index bi = 0; bi < ad; ++bi) {
              VecQ prodv = a.mul[ai].col(bi);
              for (Eigen::Index k = 0; k < ad; ++k)
                if (!prodv(k).is_zero())
                  prod(tgt * ad + k,
                       (i * ad + ai) * w.dims[q] + (j * ad + bi)) +=
                      GRat(s) * prodv(k);
            }
        }
      }
      w.product[p][q] = std::move(prod);
    }
  }
  w.unit = zerov(w.dims[0]);
  w.unit.head(ad) = a.unit;
  // canonical operation i_X(w)(X_1,...) = w(X, X_1, ...)
  out.op.lie = g;
  out.op.i.assign(r, {});
  for (int X = 0; X < r; ++X) {
    out.op.i[X].resize(N + 1);
    out.op.i[X][0] = zeros(0, w.dims[0]);
    for (Eigen::Index n = 1; n <= N; ++n) {
      MatQ ix = zeros(w.dims[n - 1], w.dims[n]);
      for (Eigen::Index si = 0; si < (Eigen::Index)combos[n].size(); ++si) {
        const auto& S = combos[n][si];
        int pos = -1;
        for (int t = 0; t < (int)S.size(); ++t)
          if (S[t] == X) { pos = t; break; }
        if (pos < 0) continue;
        std::vector<int> rest;
        for (int t = 0; t < (int)S.size(); ++t)
          if (t != pos) rest.push_back(S[t]);
        GRat sgn(pos % 2 == 0 ? 1 : -1);
        Eigen::Index tgt = subset_rank(r, rest);
        for (Eigen::Index ai = 0; ai < ad; ++ai)
          ix(tgt * ad + ai, si * ad + ai) = sgn;
      }
      out.op.i[X][n] = std::move(ix);
    }
  }
  return out;
}

namespace {

using Mono = std::pair<std::uint32_t, std::vector<int>>;

struct WeilBasis {
  std::vector<std::vector<Mono>> by_degree;
  std::map<Mono, std::pair<Eigen::Index, Eigen::Index>> index;  // (deg, pos)

  void build(int r, Eigen::Index N) {
    by_degree.assign(N + 1, {});
    for (Eigen::Index n = 0; n <= N; ++n) {
      for (Eigen::Index a = n; a >= 0; a -= 2) {
        if (a > r) continue;
        Eigen::Index s = (n - a) / 2;
        auto exts = subsets_of(r, (int)a);
        auto syms = multisets_of(r, (int)s);
        for (auto& e : exts)
          for (auto& m : syms) by_degree[n].push_back({mask_of(e), m});
      }
      for (Eigen::Index i = 0; i < (Eigen::Index)by_degree[n].size(); ++i)
        index[by_degree[n][i]] = {n, i};
    }
  }
};

// term list: (coefficient, monomial)
using Terms = std::vector<std::pair<GRat, Mono>>;

Terms mul_mono(const Mono& x, const Mono& y) {
  int s = merge_sign(x.first, y.first);
  if (s == 0) return {};
  std::vector<int> t = x.second;
  t.insert(t.end(), y.second.begin(), y.second.end());
  std::sort(t.begin(), t.end());
  return {{GRat(s), {x.first | y.first, std::move(t)}}};
}

}  // namespace

WeilAlgebra weil_build(const LieAlgebraData& g, Eigen::Index max_degree) {
  if (max_degree < 2)
    throw std::invalid_argument("weil_build: max_degree must be >= 2");
  const int r = (int)g.dim;
  WeilAlgebra W;
  W.generators = r;
  WeilBasis basis;
  basis.build(r, max_degree);
  GradedDiffAlgebra& w = W.gda;
  w.max_degree = max_degree;
  w.prod_max = max_degree;
  w.terminated = false;  // free algebra continues above any truncation
  for (auto& lvl : basis.by_degree)
    w.dims.push_back((Eigen::Index)lvl.size());

  auto C = [&](int m, int b, int c) -> GRat { return g.bracket[b](m, c); };

  // dA^b = -sum_{beta<gamma} C^b_{beta gamma} A^beta A^gamma + F^b
  // dF^b = -sum_{beta,gamma} C^b_{beta gamma} A^beta F^gamma
  auto dA = [&](int b) {
    Terms t;
    for (int be = 0; be < r; ++be)
      for (int ga = be + 1; ga < r; ++ga) {
        GRat c = C(b, be, ga);
        if (!c.is_zero())
          t.push_back({-c, {(1u << be) | (1u << ga), {}}});
      }
    t.push_back({GRat(1), {0u, {b}}});
    return t;
  };
  auto dF = [&](int b) {
    Terms t;
    for (int be = 0; be < r; ++be)
      for (int ga = 0; ga < r; ++ga) {
        GRat c = C(b, be, ga);
        if (!c.is_zero()) t.push_back({-c, {(1u << be), {ga}}});
      }
    return t;
  };

  for (Eigen::Index n = 0; n + 1 <= max_degree; ++n) {
    MatQ dn = zeros(w.dims[n + 1], w.dims[n]);
    for (Eigen::Index col = 0; col < w.dims[n]; ++col) {
      const Mono& mono = basis.by_degree[n][col];
      auto bits = unmask(mono.first);
      for (int p = 0; p < (int)bits.size(); ++p) {
        GRat sgn(p % 2 == 0 ? 1 : -1);
        Mono rest{mono.first & ~(1u << (unsigned)bits[p]), mono.second};
        for (auto& [c, dmono] : dA(bits[p]))
          for (auto& [c2, prod] : mul_mono(dmono, rest))
            dn(basis.index.at(prod).second, col) += sgn * c * c2;
      }
      // F factors: the prefix sign (-1)^a cancels against moving the odd
      // element dF to the front, so these terms carry no sign.
      for (int u = 0; u < (int)mono.second.size(); ++u) {
        std::vector<int> rest_m = mono.second;
        rest_m.erase(rest_m.begin() + u);
        Mono rest{mono.first, rest_m};
        for (auto& [c, dmono] : dF(mono.second[u]))
          for (auto& [c2, prod] : mul_mono(dmono, rest))
            dn(basis.index.at(prod).second, col) += c * c2;
      }
    }
    w.d.push_back(std::move(dn));
  }

  w.product.assign(max_degree + 1, {});
  for (Eigen::Index p = 0; p <= max_degree; ++p) {
    w.product[p].resize(max_degree - p + 1);
    for (Eigen::Index q = 0; p + q <= max_degree; ++q) {
      MatQ prod = zeros(w.dims[p + q], w.dims[p] * w.dims[q]);
      for (Eigen::Index i = 0; i < w.dims[p]; ++i)
        for (Eigen::Index j = 0; j < w.dims[q]; ++j)
          for (auto& [c, m] :
               mul_mono(basis.by_degree[p][i], basis.by_degree[q][j]))
            prod(basis.index.at(m).second, i * w.dims[q] + j) += c;
      w.product[p][q] = std::move(prod);
    }
  }
  w.unit = zerov(w.dims[0]);
  w.unit(0) = GRat(1);

  W.op.lie = g;
  W.op.i.assign(r, {});
  for (int X = 0; X < r; ++X) {
    W.op.i[X].resize(max_degree + 1);
    W.op.i[X][0] = zeros(0, w.dims[0]);
    for (Eigen::Index n = 1; n <= max_degree; ++n) {
      MatQ ix = zeros(w.dims[n - 1], w.dims[n]);
      for (Eigen::Index col = 0; col < w.dims[n]; ++col) {
        const Mono& mono = basis.by_degree[n][col];
        if (!(mono.first & (1u << (unsigned)X))) continue;
        auto bits = unmask(mono.first);
        int pos = 0;
        while (bits[pos] != X) ++pos;
        Mono rest{mono.first & ~(1u << (unsigned)X), mono.second};
        ix(basis.index.at(rest).second, col) = GRat(pos % 2 == 0 ? 1 : -1);
      }
      W.op.i[X][n] = std::move(ix);
    }
  }
  W.basis = basis.by_degree;
  return W;
}

std::vector<Eigen::Index> weil_basic_cohomology(const LieAlgebraData& g,
                                                Eigen::Index upto) {
  WeilAlgebra W = weil_build(g, std::max<Eigen::Index>(upto + 1, 2));
  auto h = basic_cohomology(W.gda, W.op, upto);
  for (Eigen::Index n = 0; n <= upto; ++n) {
    Eigen::Index expect =
        (n % 2 == 0) ? invariant_polynomials(g, n / 2).dim() : 0;
    if (h[n] != expect)
      throw std::runtime_error(
          "weil_basic_cohomology: mismatch with invariant polynomials at "
          "degree " +
          std::to_string(n));
  }
  return h;
}

}  // namespace ncdg
