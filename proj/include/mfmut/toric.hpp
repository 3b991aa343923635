#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mfmut/combinat.hpp"
#include "mfmut/rational.hpp"
#include "mfmut/weightmat.hpp"

namespace mfmut {

struct ExponentMatrix {
  int k = 0, n = 0;
  /// For each P-variable, the k row indices (i−1)·n + (j−1) of its ones.
  std::vector<std::vector<int>> ones;
  std::vector<int> signs;

  int entry(int row, std::size_t column) const;
};

ExponentMatrix exponent_matrix(const MatchingField& field);

struct Term {
  Rat coeff;
  std::vector<int> exps;  // one exponent per P-variable
};

/// Polynomial in the Plücker variables of Gr(k, n).
struct PPolynomial {
  int k = 0, n = 0;
  std::vector<Term> terms;

  std::size_t variable_count() const;
  /// Combines equal exponents, drops zeros, sorts terms by exponent support.
  void normalize();
  friend bool operator==(const PPolynomial& a, const PPolynomial& b) {
    if (a.k != b.k || a.n != b.n || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].coeff != b.terms[i].coeff || a.terms[i].exps != b.terms[i].exps) return false;
    return true;
  }
};

/// Builds a polynomial from (coefficient, [subset labels]) pairs, e.g. {1, {"145", "235"}}.
PPolynomial make_poly(int k, int n, const std::vector<std::pair<long, std::vector<std::string>>>& terms);
std::string to_string(const PPolynomial& p);
PPolynomial negate(PPolynomial p);

std::vector<PPolynomial> pluecker_deg2(int k, int n);
PPolynomial initial_form(const PPolynomial& f, const PlueckerWeightVector& w);
std::vector<PPolynomial> toric_generators_deg2(const MatchingField& field);
bool binomial_in_toric(const PPolynomial& b, const MatchingField& field);

/// True iff every polynomial of `a` lies in the rational span of `b`.
bool span_contains(const std::vector<PPolynomial>& b, const std::vector<PPolynomial>& a);

struct InclusionEntry {
  PPolynomial relation;  // weight-adapted basis element
  PPolynomial initial;
  bool binomial = false;
  bool in_toric = false;
};

struct InclusionReport {
  std::vector<InclusionEntry> entries;
  bool all_binomial = true;
  bool all_in_toric = true;
  std::vector<std::size_t> failures;  // indices into entries
};

InclusionReport inclusion_check(const MatchingField& field, const WeightMatrix& m);

struct DegenCertificate {
  std::string field_id;
  Int volume = 0;
  Int reference_volume = 0;
  bool volume_matches_reference = false;
  bool all_deg2_initials_binomial = false;
  bool all_deg2_initials_in_J = false;
  std::size_t relation_count = 0;
  std::string verdict;

  bool certified() const {
    return volume_matches_reference && all_deg2_initials_binomial && all_deg2_initials_in_J;
  }
};

DegenCertificate degeneration_certificate(const MatchingField& field, const WeightMatrix& m,
                                          const std::string& field_id = "");

}  // namespace mfmut
