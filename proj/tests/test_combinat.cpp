#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mfmut/combinat.hpp"
#include "mfmut/error.hpp"

using namespace mfmut;

namespace {

std::vector<std::vector<int>> columns(const MatchingField& f) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(tableau_of(f, i).column);
  return out;
}

KSubset sub(std::vector<int> e, int n) { return KSubset(std::move(e), n); }

}  // namespace

TEST_CASE("subset enumeration and ranking") {
  auto s = enumerate_subsets(3, 5);
  REQUIRE(s.size() == 10);
  CHECK(s.front().label() == "123");
  CHECK(s.back().label() == "345");
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(subset_rank(s[i]) == i);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(enumerate_subsets(4, 9).size() == binomial(9, 4));
  CHECK(sub({1, 10, 11}, 11).label() == "1,10,11");
}

TEST_CASE("subset and permutation validation") {
  CHECK_THROWS_AS(sub({2, 1, 3}, 5), Error);
  CHECK_THROWS_AS(sub({1, 2, 6}, 5), Error);
  CHECK_THROWS_AS(Perm({1, 1, 2}), Error);
  CHECK_THROWS_AS(Perm::swap12(1), Error);
  CHECK_THROWS_AS(enumerate_subsets(4, 3), Error);
  CHECK(Perm({2, 1, 3}).sign() == -1);
  CHECK(Perm({2, 3, 1}).sign() == 1);
  CHECK(Perm::identity(4).is_identity());
}

TEST_CASE("diagonal field tableaux of Gr(3,5)") {
  const std::vector<std::vector<int>> expected{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                               {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  CHECK(columns(block_diagonal(3, 5, 0)) == expected);
  CHECK(block_diagonal(3, 5, 5) == block_diagonal(3, 5, 0));
}

TEST_CASE("B_1 tableaux of Gr(3,5)") {
  const std::vector<std::vector<int>> expected{{2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {3, 1, 4}, {3, 1, 5},
                                               {4, 1, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  CHECK(columns(block_diagonal(3, 5, 1)) == expected);
}

TEST_CASE("block diagonal fields swap exactly when one element lies in [ell]") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k; n <= 7; ++n)
      for (int ell = 0; ell <= n; ++ell) {
        auto f = block_diagonal(k, n, ell);
        for (std::size_t i = 0; i < f.size(); ++i) {
          int hits = 0;
          for (int v : f.subsets()[i].elements()) hits += v <= ell ? 1 : 0;
          CHECK(f.at(i).is_identity() == (hits != 1));
        }
      }
}

TEST_CASE("tableau column placement") {
  auto f = block_diagonal(3, 6, 2);
  // I = 256 has |I ∩ [2]| = 1, so rows 1 and 2 swap.
  CHECK(tableau_of(f, sub({2, 5, 6}, 6)).column == std::vector<int>{5, 2, 6});
  CHECK(tableau_of(f, sub({1, 2, 6}, 6)).column == std::vector<int>{1, 2, 6});
  CHECK_THROWS_AS(tableau_of(f, sub({1, 2}, 6)), Error);
}

TEST_CASE("intermediate parameter ranges") {
  CHECK(intermediate_params_valid(3, 6, 2, 4));
  CHECK(intermediate_params_valid(3, 6, 2, 7));
  CHECK_FALSE(intermediate_params_valid(3, 6, 2, 6));  // λ = n is excluded
  CHECK_FALSE(intermediate_params_valid(3, 6, 2, 3));
  CHECK_FALSE(intermediate_params_valid(3, 6, 2, 8));
  CHECK_FALSE(intermediate_params_valid(3, 6, 5, 7));
  CHECK_THROWS_AS(intermediate(3, 5, 1, 5), Error);
}

TEST_CASE("B_0^2 to B_0^3 on Gr(3,5) moves exactly 134 and 135") {
  auto a = intermediate(3, 5, 0, 2);
  auto b = intermediate(3, 5, 0, 3);
  std::set<std::string> changed;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.at(i) == b.at(i))) changed.insert(a.subsets()[i].label());
  CHECK(changed == std::set<std::string>{"134", "135"});
  CHECK(tableau_of(b, sub({1, 3, 4}, 5)).column == std::vector<int>{3, 1, 4});
  CHECK(tableau_of(b, sub({1, 3, 5}, 5)).column == std::vector<int>{3, 1, 5});
}

TEST_CASE("intermediate fields use only id and (12) and agree with B_ell away from p, q in the ell+1 band") {
  for (int k = 3; k <= 4; ++k)
    for (int n = k + 2; n <= 7; ++n)
      for (int ell = 0; ell <= n - k + 1; ++ell)
        for (int lambda = ell + 2; lambda <= n + ell - 1; ++lambda) {
          if (lambda == n) continue;
          auto f = intermediate(k, n, ell, lambda);
          auto b = block_diagonal(k, n, ell);
          for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& perm = f.at(i);
            CHECK((perm.is_identity() || perm == Perm::swap12(k)));
            const int p = f.subsets()[i][0], q = f.subsets()[i][1];
            if (q <= ell || p > ell + 1) CHECK(perm == b.at(i));
          }
        }
}

TEST_CASE("B_0^{n-1} equals B_1") {
  for (int k = 3; k <= 4; ++k)
    for (int n = k + 1; n <= 8; ++n) CHECK(intermediate(k, n, 0, n - 1) == block_diagonal(k, n, 1));
}

TEST_CASE("Def. 2.3 at lambda = n + ell - 1 keeps (12) on {ell, ell+1, ell+2}") {
  // The definition gives p = ℓ > λ' = ℓ − 1 with q = ℓ + 1, so the identity
  // branch does not apply, while B_{ℓ+1} has two elements of I in [ℓ+1].
  for (int n = 5; n <= 7; ++n)
    for (int ell = 2; ell <= n - 2; ++ell) {
      auto f = intermediate(3, n, ell, n + ell - 1);
      KSubset s({ell, ell + 1, ell + 2}, n);
      CHECK(f.at(s) == Perm::swap12(3));
      CHECK(block_diagonal(3, n, ell + 1).at(s).is_identity());
    }
}

TEST_CASE("lifting a Gr(3, n-k+3) block diagonal field gives the Gr(k,n) one") {
  for (int k = 3; k <= 5; ++k)
    for (int n = k + 2; n <= k + 4; ++n)
      for (int ell = 0; ell <= n - k + 1; ++ell) {
        auto lifted = lift_from_gr3(block_diagonal(3, n - k + 3, ell), k, n);
        CHECK(lifted == block_diagonal(k, n, ell));
        for (std::size_t i = 0; i < lifted.size(); ++i) {
          auto col = tableau_of(lifted, i).column;
          for (int r = 3; r < k; ++r) CHECK(col[static_cast<std::size_t>(r)] == lifted.subsets()[i][static_cast<std::size_t>(r)]);
        }
      }
  CHECK_THROWS_AS(lift_from_gr3(block_diagonal(3, 5, 1), 4, 7), Error);
}

TEST_CASE("matching field construction checks sizes") {
  CHECK_THROWS_AS(MatchingField(3, 5, std::vector<Perm>(9, Perm::identity(3))), Error);
  CHECK_THROWS_AS(MatchingField(3, 5, std::vector<Perm>(10, Perm::identity(2))), Error);
}
