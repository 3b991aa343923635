#include "mfmut/combinat.hpp"

#include <algorithm>

#include "mfmut/error.hpp"

namespace mfmut {

KSubset::KSubset(std::vector<int> elements, int n) : elems_(std::move(elements)), n_(n) {
  if (elems_.empty()) fail(ErrorCode::InvalidParameters, "subset must be nonempty");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n)
      fail(ErrorCode::InvalidParameters, "subset element out of [1, n]");
    if (i > 0 && elems_[i] <= elems_[i - 1])
      fail(ErrorCode::InvalidParameters, "subset elements must be strictly increasing");
  }
}

std::string KSubset::label() const {
  std::string s;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (n_ >= 10 && i > 0) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int k = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::InvalidParameters, "not a permutation of {1..k}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  int inversions = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inversions;
  sign_ = inversions % 2 == 0 ? 1 : -1;
}

Perm Perm::identity(int k) {
  std::vector<int> im(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return Perm(std::move(im));
}

Perm Perm::swap12(int k) {
  if (k < 2) fail(ErrorCode::InvalidParameters, "(12) needs k >= 2");
  std::vector<int> im(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::swap(im[0], im[1]);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<KSubset> enumerate_subsets(int k, int n) {
  if (k < 1 || k > n) fail(ErrorCode::InvalidParameters, "enumerate_subsets requires 1 <= k <= n");
  std::vector<KSubset> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t subset_rank(const KSubset& s) {
  // Number of lex-smaller subsets.
  const int k = s.k(), n = s.n();
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[static_cast<std::size_t>(i)]; ++v) rank += binomial(n - v, k - i - 1);
    prev = s[static_cast<std::size_t>(i)];
  }
  return rank;
}

MatchingField::MatchingField(int k, int n, std::vector<Perm> perms)
    : k_(k), n_(n), subsets_(enumerate_subsets(k, n)), perms_(std::move(perms)) {
  if (perms_.size() != subsets_.size())
    fail(ErrorCode::InvalidParameters, "matching field needs one permutation per subset");
  for (const auto& p : perms_)
    if (p.k() != k) fail(ErrorCode::InvalidParameters, "permutation size differs from k");
}

const Perm& MatchingField::at(const KSubset& s) const {
  if (s.k() != k_ || s.n() != n_) fail(ErrorCode::InvalidParameters, "subset does not match (k, n)");
  return perms_[subset_rank(s)];
}

MatchingField block_diagonal(int k, int n, int ell) {
  if (k < 1 || k > n) fail(ErrorCode::InvalidParameters, "block_diagonal requires 1 <= k <= n");
  if (ell < 0 || ell > n) fail(ErrorCode::InvalidParameters, "block_diagonal requires 0 <= ell <= n");
  std::vector<Perm> perms;
  for (const auto& s : enumerate_subsets(k, n)) {
    int hits = 0;
    for (int v : s.elements())
      if (v <= ell) ++hits;
    perms.push_back(k > 1 && hits == 1 ? Perm::swap12(k) : Perm::identity(k));
  }
  return MatchingField(k, n, std::move(perms));
}

bool intermediate_params_valid(int k, int n, int ell, int lambda) {
  if (k < 2 || k > n) return false;
  if (ell < 0 || ell > n - k + 1) return false;
  if (lambda < ell + 2 || lambda > n + ell - 1 || lambda == n) return false;
  return true;
}

MatchingField intermediate(int k, int n, int ell, int lambda) {
  if (!intermediate_params_valid(k, n, ell, lambda))
    fail(ErrorCode::InvalidParameters,
         "intermediate requires 2 <= k <= n, 0 <= ell <= n-k+1 and lambda in {ell+2..n+ell-1} \\ {n}");
  std::vector<Perm> perms;
  for (const auto& s : enumerate_subsets(k, n)) {
    const int p = s[0], q = s[1];
    bool id;
    if (lambda < n) {
      id = q <= ell || (p == ell + 1 && ell + 1 < lambda && lambda < q) || ell + 1 < p;
    } else {
      const int lp = lambda - n;
      id = q <= ell || (p <= lp && lp < q && q == ell + 1) || ell + 1 < p;
    }
    perms.push_back(id ? Perm::identity(k) : Perm::swap12(k));
  }
  return MatchingField(k, n, std::move(perms));
}

Tableau tableau_of(const MatchingField& field, std::size_t index) {
  const KSubset& s = field.subsets()[index];
  const Perm& sigma = field.at(index);
  Tableau t;
  t.column.assign(static_cast<std::size_t>(field.k()), 0);
  for (int r = 1; r <= field.k(); ++r)
    t.column[static_cast<std::size_t>(sigma(r) - 1)] = s[static_cast<std::size_t>(r - 1)];
  return t;
}

Tableau tableau_of(const MatchingField& field, const KSubset& s) {
  if (s.k() != field.k() || s.n() != field.n())
    fail(ErrorCode::InvalidParameters, "subset does not match the field's (k, n)");
  return tableau_of(field, subset_rank(s));
}

MatchingField lift_from_gr3(const MatchingField& f3, int k, int n) {
  if (f3.k() != 3 || k < 3 || f3.n() != n - k + 3)
    fail(ErrorCode::InvalidParameters, "lift_from_gr3 expects a Gr(3, n-k+3) field");
  std::vector<Perm> perms;
  for (const auto& s : enumerate_subsets(k, n)) {
    KSubset head({s[0], s[1], s[2]}, f3.n());
    std::vector<int> im = f3.at(head).images();
    for (int r = 4; r <= k; ++r) im.push_back(r);
    perms.emplace_back(std::move(im));
  }
  return MatchingField(k, n, std::move(perms));
}

}  // namespace mfmut
