#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mfmut/error.hpp"
#include "mfmut/weightmat.hpp"

using namespace mfmut;

namespace {

/// Minimum-weight terms of the k×k minor on I, by listing all k! terms.
std::vector<std::vector<int>> argmin_terms(const WeightMatrix& m, const KSubset& s) {
  const int k = s.k();
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::int64_t best = 0;
  std::vector<std::vector<int>> out;
  bool first = true;
  do {
    std::int64_t w = 0;
    for (int r = 0; r < k; ++r) w += m.at(sigma[static_cast<std::size_t>(r)], s[static_cast<std::size_t>(r)]);
    if (first || w < best) {
      best = w;
      out.clear();
      first = false;
    }
    if (w == best) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST_CASE("weights induced by the diagonal example matrix") {
  WeightMatrix m(3, 5, {0, 0, 0, 0, 0, 5, 4, 3, 2, 1, 9, 7, 5, 3, 1});
  auto w = induced_weight_vector(m, 3, 5);
  CHECK(w.weights == std::vector<std::int64_t>{9, 7, 5, 6, 4, 3, 6, 4, 3, 3});
  CHECK(induced_matching_field(m, 3, 5) == block_diagonal(3, 5, 0));
}

TEST_CASE("M_1 on Gr(3,5)") {
  auto m = m_ell(3, 5, 1);
  CHECK(m.entries() == std::vector<std::int64_t>{0, 0, 0, 0, 0, 1, 5, 4, 3, 2, 10, 8, 6, 4, 2});
  CHECK(induced_weight_vector(m, 3, 5).weights == std::vector<std::int64_t>{7, 5, 3, 5, 3, 3, 8, 6, 5, 5});
  CHECK(induced_matching_field(m, 3, 5) == block_diagonal(3, 5, 1));
}

TEST_CASE("M_ell rows follow the displayed pattern") {
  auto m = m_ell(4, 7, 3);
  const std::vector<std::int64_t> row2{3, 2, 1, 7, 6, 5, 4};
  for (int j = 1; j <= 7; ++j) {
    CHECK(m.at(1, j) == 0);
    CHECK(m.at(2, j) == row2[static_cast<std::size_t>(j - 1)]);
    CHECK(m.at(3, j) == 2 * (8 - j));
    CHECK(m.at(4, j) == 3 * (8 - j));
  }
}

TEST_CASE("min_weight_terms agrees with full term enumeration") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3), n = k + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> e(static_cast<std::size_t>(k * n));
    for (auto& x : e) x = d(rng);
    WeightMatrix m(k, n, e);
    for (const auto& s : enumerate_subsets(k, n)) {
      auto got = min_weight_terms(m, s);
      auto want = argmin_terms(m, s);
      REQUIRE(got.size() == want.size());
      std::vector<std::vector<int>> images;
      for (const auto& p : got) images.push_back(p.images());
      std::sort(images.begin(), images.end());
      CHECK(images == want);
      const bool unique = want.size() == 1;
      if (!unique) CHECK_FALSE(is_coherent(m, k, n));
    }
  }
}

TEST_CASE("coherence failure is reported as NotCoherent") {
  WeightMatrix zero(3, 5);
  CHECK_FALSE(is_coherent(zero, 3, 5));
  try {
    (void)induced_matching_field(zero, 3, 5);
    FAIL("expected NotCoherent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoherent);
  }
}

TEST_CASE("adding a constant to a column leaves the induced field unchanged") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int k = 3; k <= 4; ++k)
    for (int n = k + 1; n <= 6; ++n)
      for (int ell = 0; ell <= n - k + 1; ++ell) {
        auto m = m_ell(k, n, ell);
        auto shifted = m;
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = d(rng);
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= n; ++j) shifted.set(i, j, m.at(i, j) + c[static_cast<std::size_t>(j - 1)]);
        CHECK(induced_matching_field(shifted, k, n) == induced_matching_field(m, k, n));
        auto w = induced_weight_vector(m, k, n).weights;
        auto ws = induced_weight_vector(shifted, k, n).weights;
        auto subsets = enumerate_subsets(k, n);
        for (std::size_t i = 0; i < subsets.size(); ++i) {
          std::int64_t shift = 0;
          for (int v : subsets[i].elements()) shift += c[static_cast<std::size_t>(v - 1)];
          CHECK(ws[i] == w[i] + shift);
        }
      }
}

TEST_CASE("M_ell and M_ell^lambda induce the named fields") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k; n <= 7; ++n) {
      for (int ell = 0; ell <= n; ++ell) {
        auto m = m_ell(k, n, ell);
        REQUIRE(is_coherent(m, k, n));
        CHECK(induced_matching_field(m, k, n) == block_diagonal(k, n, ell));
      }
      for (int ell = 0; ell <= n - k + 1; ++ell)
        for (int lambda = ell + 2; lambda <= n + ell - 1; ++lambda) {
          if (lambda == n) continue;
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(ell);
          CAPTURE(lambda);
          auto m = m_ell_lambda(k, n, ell, lambda);
          REQUIRE(is_coherent(m, k, n));
          CHECK(induced_matching_field(m, k, n) == intermediate(k, n, ell, lambda));
        }
    }
}

TEST_CASE("term weight and shape checks") {
  auto m = m_ell(3, 5, 1);
  KSubset s({1, 2, 3}, 5);
  CHECK(term_weight(m, s, Perm::swap12(3)) == 0 + 1 + 6);
  CHECK_THROWS_AS(WeightMatrix(2, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(m_ell_lambda(3, 5, 1, 5), Error);
  CHECK_THROWS_AS(m.at(4, 1), Error);
}
