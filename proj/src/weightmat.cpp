#include "mfmut/weightmat.hpp"

#include <algorithm>
#include <limits>

#include "mfmut/error.hpp"

namespace mfmut {

WeightMatrix::WeightMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 1 || cols < 1) fail(ErrorCode::InvalidParameters, "weight matrix must be nonempty");
}

WeightMatrix::WeightMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1 || entries_.size() != static_cast<std::size_t>(rows * cols))
    fail(ErrorCode::InvalidParameters, "weight matrix shape mismatch");
}

std::int64_t WeightMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(ErrorCode::InvalidParameters, "weight matrix index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

void WeightMatrix::set(int i, int j, std::int64_t v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(ErrorCode::InvalidParameters, "weight matrix index out of range");
  entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))] = v;
}

WeightMatrix m_ell(int k, int n, int ell) {
  if (k < 2 || k > n) fail(ErrorCode::InvalidParameters, "m_ell requires 2 <= k <= n");
  if (ell < 0 || ell > n) fail(ErrorCode::InvalidParameters, "m_ell requires 0 <= ell <= n");
  WeightMatrix m(k, n);
  for (int j = 1; j <= n; ++j) {
    m.set(2, j, j <= ell ? ell - j + 1 : n - (j - ell - 1));
    for (int i = 3; i <= k; ++i) m.set(i, j, static_cast<std::int64_t>(i - 1) * (n - j + 1));
  }
  return m;
}

WeightMatrix m_ell_lambda(int k, int n, int ell, int lambda) {
  if (!intermediate_params_valid(k, n, ell, lambda))
    fail(ErrorCode::InvalidParameters, "m_ell_lambda: (ell, lambda) outside the admissible range");
  WeightMatrix m(k, n);
  std::vector<std::int64_t> row2(static_cast<std::size_t>(n) + 1, 0);
  if (lambda < n) {
    for (int j = 1; j <= ell; ++j) row2[j] = ell - j + 1;
    row2[ell + 1] = n - lambda + ell + 1;
    for (int j = ell + 2; j <= lambda - 1; ++j) row2[j] = n - (j - ell - 2);
    row2[lambda] = n - lambda + ell + 2;
    for (int j = lambda + 1; j <= n; ++j) row2[j] = n - lambda + ell - (j - lambda - 1);
  } else {
    const int lp = lambda - n;
    for (int j = 1; j <= lp; ++j) row2[j] = ell + 1 - (j - 1);
    for (int j = lp + 1; j <= ell; ++j) row2[j] = ell - lp - (j - lp - 1);
    row2[ell + 1] = ell - lp + 1;
    for (int j = ell + 2; j <= n; ++j) row2[j] = n - (j - ell - 2);
  }
  const std::int64_t big = n + 1;
  for (int j = 1; j <= n; ++j) {
    m.set(2, j, row2[static_cast<std::size_t>(j)]);
    std::int64_t scale = 1;
    for (int i = 3; i <= k; ++i) {
      scale *= big;
      m.set(i, j, scale * (n - j + 1));
    }
  }
  return m;
}

std::int64_t term_weight(const WeightMatrix& m, const KSubset& s, const Perm& sigma) {
  std::int64_t w = 0;
  for (int r = 1; r <= s.k(); ++r) w += m.at(sigma(r), s[static_cast<std::size_t>(r - 1)]);
  return w;
}

std::vector<Perm> min_weight_terms(const WeightMatrix& m, const KSubset& s) {
  const int k = s.k();
  if (m.rows() < k || m.cols() < s.elements().back())
    fail(ErrorCode::DimensionMismatch, "weight matrix too small for subset");
  std::vector<int> im(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Perm> out;
  do {
    Perm p(im);
    std::int64_t w = term_weight(m, s, p);
    if (w < best) {
      best = w;
      out.clear();
    }
    if (w == best) out.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

bool is_coherent(const WeightMatrix& m, int k, int n) {
  for (const auto& s : enumerate_subsets(k, n))
    if (min_weight_terms(m, s).size() != 1) return false;
  return true;
}

MatchingField induced_matching_field(const WeightMatrix& m, int k, int n) {
  std::vector<Perm> perms;
  for (const auto& s : enumerate_subsets(k, n)) {
    auto terms = min_weight_terms(m, s);
    if (terms.size() != 1)
      fail(ErrorCode::NotCoherent, "weight matrix ties at I = {" + s.label() + "}");
    perms.push_back(terms.front());
  }
  return MatchingField(k, n, std::move(perms));
}

PlueckerWeightVector induced_weight_vector(const WeightMatrix& m, int k, int n) {
  PlueckerWeightVector out;
  for (const auto& s : enumerate_subsets(k, n)) {
    auto terms = min_weight_terms(m, s);
    out.weights.push_back(term_weight(m, s, terms.front()));
  }
  return out;
}

}  // namespace mfmut
