#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mfmut {

/// Strictly increasing k-subset of [n], 1-based.
class KSubset {
 public:
  KSubset() = default;
  KSubset(std::vector<int> elements, int n);  // validates

  int n() const { return n_; }
  int k() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  int operator[](std::size_t i) const { return elems_[i]; }
  std::string label() const;  // "125", or "1,10,11" when n ≥ 10

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }
  friend bool operator<(const KSubset& a, const KSubset& b) { return a.elems_ < b.elems_; }

 private:
  std::vector<int> elems_;
  int n_ = 0;
};

/// Permutation of {1..k} in one-line notation with cached sign.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates

  static Perm identity(int k);
  static Perm swap12(int k);

  int k() const { return static_cast<int>(images_.size()); }
  int operator()(int r) const { return images_[static_cast<std::size_t>(r - 1)]; }
  const std::vector<int>& images() const { return images_; }
  int sign() const { return sign_; }
  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
  int sign_ = 1;
};

std::vector<KSubset> enumerate_subsets(int k, int n);
std::size_t binomial(int n, int k);
/// Position of a subset in enumerate_subsets order.
std::size_t subset_rank(const KSubset& s);

/// Column of k entries; entry at row σ(r) is i_r.
struct Tableau {
  std::vector<int> column;
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.column == b.column; }
};

class MatchingField {
 public:
  MatchingField() = default;
  /// perms[i] is the permutation of the i-th subset in enumerate_subsets order.
  MatchingField(int k, int n, std::vector<Perm> perms);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const std::vector<KSubset>& subsets() const { return subsets_; }
  const std::vector<Perm>& perms() const { return perms_; }
  const Perm& at(const KSubset& s) const;
  const Perm& at(std::size_t index) const { return perms_[index]; }

  friend bool operator==(const MatchingField& a, const MatchingField& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.perms_ == b.perms_;
  }

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<KSubset> subsets_;
  std::vector<Perm> perms_;
};

MatchingField block_diagonal(int k, int n, int ell);
MatchingField intermediate(int k, int n, int ell, int lambda);
bool intermediate_params_valid(int k, int n, int ell, int lambda);

Tableau tableau_of(const MatchingField& field, const KSubset& s);
Tableau tableau_of(const MatchingField& field, std::size_t index);

/// Gr(k,n) field whose first three tableau rows follow a Gr(3, n−k+3) field
/// and whose remaining rows are i₄ < … < i_k.
MatchingField lift_from_gr3(const MatchingField& f3, int k, int n);

}  // namespace mfmut
