#include "mfmut/linalg.hpp"

#include <algorithm>
#include <utility>

#include "mfmut/error.hpp"

namespace mfmut {

Echelon rref(RatMatrix m, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m[r][j]) != 0) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b, std::size_t cols) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "solve: row count mismatch");
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(std::move(aug), cols + 1);
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorCode::DimensionMismatch, "inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = rref(std::move(aug), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    fail(ErrorCode::Precondition, "inverse: singular matrix");
  RatMatrix inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Int determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        m[i][j] = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

IntVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return primitive(out);
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVec out = v;
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntMatrix integer_kernel(const IntMatrix& c, std::size_t cols) {
  // Unimodular column operations bring C to column echelon form; the
  // transformation columns matching zero columns span the kernel lattice.
  IntMatrix a = c;
  IntMatrix u = identity_int(cols);  // u[j] is column j of the transform
  std::size_t piv = 0;
  for (std::size_t r = 0; r < a.size() && piv < cols; ++r) {
    for (std::size_t j = piv + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      if (a[r][piv] == 0) {
        for (auto& row : a) std::swap(row[piv], row[j]);
        std::swap(u[piv], u[j]);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][piv].get_mpz_t(),
                 a[r][j].get_mpz_t());
      Int x = a[r][piv] / g, y = a[r][j] / g;
      // [col_piv, col_j] <- [s·col_piv + t·col_j, −y·col_piv + x·col_j]
      for (auto& row : a) {
        Int p = row[piv], q = row[j];
        row[piv] = s * p + t * q;
        row[j] = -y * p + x * q;
      }
      for (std::size_t i = 0; i < cols; ++i) {
        Int p = u[piv][i], q = u[j][i];
        u[piv][i] = s * p + t * q;
        u[j][i] = -y * p + x * q;
      }
    }
    if (a[r][piv] != 0) ++piv;
  }
  IntMatrix basis(u.begin() + static_cast<std::ptrdiff_t>(piv), u.end());
  return hermite_rows(std::move(basis), cols);
}

IntMatrix hermite_rows(IntMatrix m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

RatMatrix transpose(const RatMatrix& m, std::size_t cols) {
  RatMatrix t(cols, RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  RatVec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
  IntVec out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) fail(ErrorCode::DimensionMismatch, "mat_vec: length mismatch");
    Int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (row[j] != 0 && v[j] != 0) s += row[j] * v[j];
    out.push_back(s);
  }
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  RatMatrix c(a.size(), RatVec(cols, Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < inner; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(a.size(), IntVec(cols, Int(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace mfmut
