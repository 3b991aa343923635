#pragma once

#include <cstdint>
#include <vector>

#include "mfmut/combinat.hpp"

namespace mfmut {

class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(int rows, int cols);
  WeightMatrix(int rows, int cols, std::vector<std::int64_t> entries);  // row-major

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-based access.
  std::int64_t at(int i, int j) const;
  void set(int i, int j, std::int64_t v);
  const std::vector<std::int64_t>& entries() const { return entries_; }

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> entries_;
};

struct PlueckerWeightVector {
  std::vector<std::int64_t> weights;  // enumerate_subsets order
};

WeightMatrix m_ell(int k, int n, int ell);
WeightMatrix m_ell_lambda(int k, int n, int ell, int lambda);

/// Σ_r m_{σ(r), i_r}.
std::int64_t term_weight(const WeightMatrix& m, const KSubset& s, const Perm& sigma);
std::vector<Perm> min_weight_terms(const WeightMatrix& m, const KSubset& s);
bool is_coherent(const WeightMatrix& m, int k, int n);
MatchingField induced_matching_field(const WeightMatrix& m, int k, int n);
PlueckerWeightVector induced_weight_vector(const WeightMatrix& m, int k, int n);

}  // namespace mfmut
