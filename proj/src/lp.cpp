#include "mfmut/lp.hpp"

#include <cstddef>
#include <limits>

#include "mfmut/error.hpp"

namespace mfmut {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  RatMatrix rows;  // m rows, ncols + 1 entries (last is rhs)
  RatVec cost;     // reduced costs, ncols + 1 entries (last is −objective)
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    RatVec& pr = rows[r];
    Rat inv = 1 / pr[c];
    for (auto& x : pr)
      if (sgn(x) != 0) x *= inv;
    auto eliminate = [&](RatVec& row) {
      if (sgn(row[c]) == 0) return;
      Rat f = row[c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(cost);
    basis[r] = c;
  }

  // Bland's rule: smallest entering index, ties in the ratio test broken by
  // smallest basic index. Returns false when unbounded.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (sgn(cost[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

// Runs phase I; on success the tableau holds a feasible basis over the
// structural columns only (artificial columns are dropped).
bool phase_one(const RatMatrix& a, const RatVec& b, std::size_t n, Tableau& t) {
  const std::size_t m = a.size();
  if (b.size() != m) fail(ErrorCode::DimensionMismatch, "lp: rhs length mismatch");
  t.ncols = n + m;
  t.rows.assign(m, RatVec(t.ncols + 1, Rat(0)));
  t.basis.resize(m);
  t.cost.assign(t.ncols + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) fail(ErrorCode::DimensionMismatch, "lp: row length mismatch");
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(a[i][j]) != 0) t.rows[i][j] = s * a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.ncols] = s * b[i];
    t.basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) t.cost[j] -= t.rows[i][j];
    t.cost[t.ncols] -= t.rows[i][t.ncols];
  }
  t.optimize(t.ncols);
  if (sgn(t.cost[t.ncols]) != 0) return false;

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t c = kNone;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t.rows[i][j]) != 0) {
        c = j;
        break;
      }
    if (c == kNone) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, c);
    ++i;
  }
  for (auto& row : t.rows) {
    Rat rhs = row[t.ncols];
    row.resize(n + 1);
    row[n] = rhs;
  }
  t.ncols = n;
  return true;
}

}  // namespace

LpResult lp_minimize(const RatMatrix& a, const RatVec& b, const RatVec& c) {
  const std::size_t n = c.size();
  Tableau t;
  LpResult res;
  if (!phase_one(a, b, n, t)) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  t.cost.assign(n + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) t.cost[j] = c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rat& cb = c[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j <= n; ++j)
      if (sgn(t.rows[i][j]) != 0) t.cost[j] -= cb * t.rows[i][j];
  }
  if (!t.optimize(n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rows[i][n];
  res.objective = -t.cost[n];
  return res;
}

bool lp_feasible(const RatMatrix& a, const RatVec& b) {
  Tableau t;
  return phase_one(a, b, a.empty() ? 0 : a[0].size(), t);
}

}  // namespace mfmut
