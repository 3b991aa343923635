// Independent reference computations for the test suite. Nothing here calls
// into the library's linear algebra, LP or hull code.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

/// deg Gr(k,n) = (k(n−k))! · ∏_{i<k} i! / (n−k+i)!
inline Z grassmannian_degree(int k, int n) {
  auto fact = [](int m) {
    Z r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
  };
  Q d = Q(fact(k * (n - k)));
  for (int i = 0; i < k; ++i) d *= Q(fact(i), fact(n - k + i));
  d.canonicalize();
  return d.get_num();
}

/// Row reduction returning rank; m is reduced in place.
inline std::size_t eliminate(QMat& m, std::size_t cols, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

inline std::size_t affine_rank(const std::vector<QVec>& pts) {
  if (pts.empty()) return 0;
  QMat m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec row(pts[0].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
    m.push_back(row);
  }
  return eliminate(m, pts[0].size());
}

inline Q det(QMat m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

/// Solves A x = b (A given by columns) exactly; nullopt when inconsistent.
inline std::optional<QVec> solve_columns(const std::vector<QVec>& columns, const QVec& b) {
  const std::size_t rows = b.size(), cols = columns.size();
  QMat m(rows, QVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = columns[j][i];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> piv;
  std::size_t r = eliminate(m, cols + 1, &piv);
  if (r > 0 && piv[r - 1] == cols) return std::nullopt;
  QVec x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[piv[i]] = m[i][cols];
  return x;
}

/// Carathéodory: p ∈ conv(pts) iff p is a convex combination of some
/// affinely independent subset.
inline bool caratheodory_contains(const QVec& p, const std::vector<QVec>& pts) {
  const std::size_t n = pts.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<QVec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(pts[i]);
    if (affine_rank(sub) + 1 != sub.size()) continue;
    std::vector<QVec> cols;
    for (const auto& s : sub) {
      QVec c = s;
      c.push_back(1);
      cols.push_back(c);
    }
    QVec b = p;
    b.push_back(1);
    auto x = solve_columns(cols, b);
    if (x && std::all_of(x->begin(), x->end(), [](const Q& v) { return v >= 0; })) return true;
  }
  return false;
}

namespace detail {

/// Coordinates of pts (which span an m-dimensional affine space) in Q^m.
inline std::vector<QVec> flatten(const std::vector<QVec>& pts) {
  QMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[0].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    dirs.push_back(d);
  }
  // Greedy basis of the direction space.
  std::vector<QVec> basis;
  for (const auto& d : dirs) {
    auto trial = basis;
    trial.push_back(d);
    QMat t = trial;
    if (eliminate(t, d.size()) == trial.size()) basis = trial;
  }
  std::vector<QVec> out;
  for (const auto& p : pts) {
    QVec rel(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) rel[j] = p[j] - pts[0][j];
    out.push_back(*solve_columns(basis, rel));
  }
  return out;
}

/// Triangulation of conv(pts) for full-dimensional pts ⊂ Q^m, by coning
/// from the first point over a recursive triangulation of every facet
/// avoiding it. Facets are found by brute force over m-subsets.
inline std::vector<std::vector<std::size_t>> triangulate(const std::vector<QVec>& pts) {
  const std::size_t m = pts[0].size();
  if (m == 0) return {{0}};
  if (m == 1) {
    auto lo = std::min_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a[0] < b[0]; });
    auto hi = std::max_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a[0] < b[0]; });
    return {{static_cast<std::size_t>(lo - pts.begin()), static_cast<std::size_t>(hi - pts.begin())}};
  }
  std::set<std::vector<std::size_t>> facets;
  std::vector<std::size_t> idx(m);
  std::vector<bool> choose(pts.size(), false);
  std::fill(choose.end() - static_cast<long>(m), choose.end(), true);
  do {
    idx.clear();
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (choose[i]) idx.push_back(i);
    std::vector<QVec> sub;
    for (auto i : idx) sub.push_back(pts[i]);
    if (affine_rank(sub) != m - 1) continue;
    // Normal: kernel of the m−1 difference vectors.
    QMat a;
    for (std::size_t i = 1; i < m; ++i) {
      QVec d(m);
      for (std::size_t j = 0; j < m; ++j) d[j] = sub[i][j] - sub[0][j];
      a.push_back(d);
    }
    std::vector<std::size_t> piv;
    eliminate(a, m, &piv);
    std::size_t free_col = 0;
    while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
    QVec normal(m, 0);
    normal[free_col] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) normal[piv[r]] = -a[r][free_col];
    Q off = 0;
    for (std::size_t j = 0; j < m; ++j) off += normal[j] * sub[0][j];
    int side = 0;
    bool ok = true;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      Q v = -off;
      for (std::size_t j = 0; j < m; ++j) v += normal[j] * pts[i][j];
      int s = sgn(v);
      if (s == 0) tight.push_back(i);
      else if (side == 0) side = s;
      else if (s != side) ok = false;
    }
    if (ok) facets.insert(tight);
  } while (std::next_permutation(choose.begin(), choose.end()));

  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : facets) {
    if (std::find(f.begin(), f.end(), std::size_t{0}) != f.end()) continue;
    std::vector<QVec> fp;
    for (auto i : f) fp.push_back(pts[i]);
    for (const auto& s : triangulate(flatten(fp))) {
      std::vector<std::size_t> simplex{0};
      for (auto i : s) simplex.push_back(f[i]);
      out.push_back(simplex);
    }
  }
  return out;
}

}  // namespace detail

/// Normalized volume of full-dimensional integer points in Z^d.
inline Z normalized_volume(const std::vector<QVec>& pts) {
  const std::size_t d = pts[0].size();
  if (affine_rank(pts) != d) return 0;
  Z total = 0;
  for (const auto& s : detail::triangulate(pts)) {
    QMat m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      QVec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = pts[s[i]][j] - pts[s[0]][j];
      m.push_back(row);
    }
    Q v = abs(det(m));
    total += v.get_num();
  }
  return total;
}

/// Polynomials in the k×n symbolic entries x_{ij}; monomials are sorted
/// lists of variable indices i·n + j.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Q>;

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Full expansion of the maximal minor on columns `cols` (1-based).
inline Poly minor(const std::vector<int>& cols, int n) {
  const int k = static_cast<int>(cols.size());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    Monomial m;
    for (int r = 0; r < k; ++r) m.push_back(perm[static_cast<std::size_t>(r)] * n + cols[static_cast<std::size_t>(r)] - 1);
    std::sort(m.begin(), m.end());
    out[m] += perm_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out[m] += ca * cb;
    }
  return out;
}

inline void add_scaled(Poly& acc, const Poly& p, const Q& c) {
  for (const auto& [m, v] : p) acc[m] += c * v;
}

inline bool is_zero(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace oracle
