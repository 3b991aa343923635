#include "mfmut/toric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "mfmut/error.hpp"
#include "mfmut/linalg.hpp"
#include "mfmut/polytope.hpp"

namespace mfmut {
namespace {

// Sorted variable indices of a monomial, with multiplicity.
std::vector<int> support(const std::vector<int>& exps) {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<int> pair_exps(std::size_t count, std::size_t a, std::size_t b) {
  std::vector<int> e(count, 0);
  ++e[a];
  ++e[b];
  return e;
}

void check_desk_scale(int k, int n, int max_k, int max_n, const char* op) {
  if (k < 1 || k > n) fail(ErrorCode::InvalidParameters, std::string(op) + ": needs 1 <= k <= n");
  if (k > max_k || n > max_n)
    fail(ErrorCode::ScaleExceeded, std::string(op) + ": limited to k <= " + std::to_string(max_k) +
                                       ", n <= " + std::to_string(max_n));
}

// Expanded determinant of the k×k submatrix on the columns of s:
// (sign, sorted x-indices) per term.
std::vector<std::pair<int, std::vector<int>>> det_terms(const KSubset& s) {
  const int k = s.k(), n = s.n();
  std::vector<int> im(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::pair<int, std::vector<int>>> out;
  do {
    Perm p(im);
    std::vector<int> xs;
    for (int r = 1; r <= k; ++r) xs.push_back((r - 1) * n + s[static_cast<std::size_t>(p(r) - 1)] - 1);
    std::sort(xs.begin(), xs.end());
    out.push_back({p.sign(), std::move(xs)});
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::uint64_t encode(const std::vector<int>& xs) {
  std::uint64_t key = 0;
  for (int x : xs) key = key * 64 + static_cast<std::uint64_t>(x + 1);
  return key;
}

int monomial_sign(const MatchingField& field, const std::vector<int>& exps) {
  int s = 1;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] % 2 == 1) s *= field.at(i).sign();
  return s;
}

std::vector<int> monomial_image(const ExponentMatrix& a, const std::vector<int>& exps) {
  std::vector<int> img;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) img.insert(img.end(), a.ones[i].begin(), a.ones[i].end());
  std::sort(img.begin(), img.end());
  return img;
}

std::int64_t monomial_weight(const std::vector<int>& exps, const PlueckerWeightVector& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) s += exps[i] * w.weights[i];
  return s;
}

// Groups of degree-2 monomials sharing the multiset of subset elements.
std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> content_groups(
    const std::vector<KSubset>& subsets) {
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a; b < subsets.size(); ++b) {
      std::vector<int> key = subsets[a].elements();
      key.insert(key.end(), subsets[b].elements().begin(), subsets[b].elements().end());
      std::sort(key.begin(), key.end());
      groups[key].push_back({a, b});
    }
  return groups;
}

PPolynomial from_vector(int k, int n, std::size_t nvars, const std::vector<std::pair<std::size_t, std::size_t>>& members,
                        const IntVec& coeffs) {
  PPolynomial p{k, n, {}};
  for (std::size_t i = 0; i < members.size(); ++i)
    if (coeffs[i] != 0) p.terms.push_back({Rat(coeffs[i]), pair_exps(nvars, members[i].first, members[i].second)});
  p.normalize();
  return p;
}

// Kernel of ψ restricted to one content group, as rows over the members.
RatMatrix group_kernel(const std::vector<KSubset>& subsets,
                       const std::vector<std::pair<std::size_t, std::size_t>>& members) {
  std::map<std::uint64_t, std::size_t> rows;
  std::vector<std::map<std::size_t, Int>> cols(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    auto ta = det_terms(subsets[members[c].first]);
    auto tb = det_terms(subsets[members[c].second]);
    for (const auto& [sa, xa] : ta)
      for (const auto& [sb, xb] : tb) {
        std::vector<int> xs = xa;
        xs.insert(xs.end(), xb.begin(), xb.end());
        std::sort(xs.begin(), xs.end());
        auto [it, inserted] = rows.emplace(encode(xs), rows.size());
        cols[c][it->second] += sa * sb;
      }
  }
  RatMatrix m(rows.size(), RatVec(members.size(), Rat(0)));
  for (std::size_t c = 0; c < members.size(); ++c)
    for (const auto& [r, v] : cols[c]) m[r][c] = v;
  return nullspace(m, members.size());
}

}  // namespace

int ExponentMatrix::entry(int row, std::size_t column) const {
  const auto& o = ones.at(column);
  return std::find(o.begin(), o.end(), row) != o.end() ? 1 : 0;
}

ExponentMatrix exponent_matrix(const MatchingField& field) {
  ExponentMatrix a;
  a.k = field.k();
  a.n = field.n();
  for (std::size_t i = 0; i < field.size(); ++i) {
    const KSubset& s = field.subsets()[i];
    const Perm& sigma = field.at(i);
    std::vector<int> o;
    for (int r = 1; r <= a.k; ++r) o.push_back((sigma(r) - 1) * a.n + s[static_cast<std::size_t>(r - 1)] - 1);
    std::sort(o.begin(), o.end());
    a.ones.push_back(std::move(o));
    a.signs.push_back(sigma.sign());
  }
  return a;
}

std::size_t PPolynomial::variable_count() const { return binomial(n, k); }

void PPolynomial::normalize() {
  std::map<std::vector<int>, Rat> acc;
  for (auto& t : terms) acc[support(t.exps)] += t.coeff;
  const std::size_t nv = variable_count();
  terms.clear();
  for (auto& [sup, c] : acc) {
    if (sgn(c) == 0) continue;
    std::vector<int> e(nv, 0);
    for (int v : sup) ++e[static_cast<std::size_t>(v)];
    terms.push_back({c, std::move(e)});
  }
}

PPolynomial make_poly(int k, int n, const std::vector<std::pair<long, std::vector<std::string>>>& terms) {
  const auto subsets = enumerate_subsets(k, n);
  PPolynomial p{k, n, {}};
  for (const auto& [c, labels] : terms) {
    std::vector<int> e(subsets.size(), 0);
    for (const auto& l : labels) {
      auto it = std::find_if(subsets.begin(), subsets.end(), [&](const KSubset& s) { return s.label() == l; });
      if (it == subsets.end()) fail(ErrorCode::Parse, "unknown Pluecker variable P_" + l);
      ++e[static_cast<std::size_t>(it - subsets.begin())];
    }
    p.terms.push_back({Rat(c), std::move(e)});
  }
  p.normalize();
  return p;
}

std::string to_string(const PPolynomial& p) {
  if (p.terms.empty()) return "0";
  const auto subsets = enumerate_subsets(p.k, p.n);
  std::string s;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const Term& t = p.terms[i];
    Rat c = t.coeff;
    if (sgn(c) < 0) {
      s += i ? " - " : "-";
      c = -c;
    } else if (i) {
      s += " + ";
    }
    if (c != 1) s += c.get_str() + "*";
    bool first = true;
    for (int v : support(t.exps)) {
      if (!first) s += "*";
      s += "P" + subsets[static_cast<std::size_t>(v)].label();
      first = false;
    }
  }
  return s;
}

PPolynomial negate(PPolynomial p) {
  for (auto& t : p.terms) t.coeff = -t.coeff;
  return p;
}

std::vector<PPolynomial> pluecker_deg2(int k, int n) {
  check_desk_scale(k, n, 4, 8, "pluecker_deg2");
  const auto subsets = enumerate_subsets(k, n);
  std::vector<PPolynomial> out;
  for (const auto& [key, members] : content_groups(subsets)) {
    if (members.size() < 2) continue;
    RatMatrix ker = group_kernel(subsets, members);
    if (ker.empty()) continue;
    for (const auto& row : rref(ker, members.size()).rows)
      out.push_back(from_vector(k, n, subsets.size(), members, primitive(row)));
  }
  return out;
}

PPolynomial initial_form(const PPolynomial& f, const PlueckerWeightVector& w) {
  PPolynomial out{f.k, f.n, {}};
  if (f.terms.empty()) return out;
  if (w.weights.size() != f.variable_count())
    fail(ErrorCode::DimensionMismatch, "initial_form: weight vector length mismatch");
  std::int64_t best = monomial_weight(f.terms[0].exps, w);
  for (const auto& t : f.terms) best = std::min(best, monomial_weight(t.exps, w));
  for (const auto& t : f.terms)
    if (monomial_weight(t.exps, w) == best) out.terms.push_back(t);
  return out;
}

std::vector<PPolynomial> toric_generators_deg2(const MatchingField& field) {
  check_desk_scale(field.k(), field.n(), 6, 10, "toric_generators_deg2");
  const ExponentMatrix a = exponent_matrix(field);
  const std::size_t nv = field.size();
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> fibers;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i; j < nv; ++j) fibers[monomial_image(a, pair_exps(nv, i, j))].push_back({i, j});
  std::vector<PPolynomial> out;
  for (const auto& [img, members] : fibers) {
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        auto hi = std::max(members[x], members[y]);
        auto lo = std::min(members[x], members[y]);
        auto ehi = pair_exps(nv, hi.first, hi.second);
        auto elo = pair_exps(nv, lo.first, lo.second);
        int sigma = monomial_sign(field, ehi) * monomial_sign(field, elo);
        PPolynomial p{field.k(), field.n(), {{Rat(1), ehi}, {Rat(-sigma), elo}}};
        p.normalize();
        out.push_back(std::move(p));
      }
  }
  return out;
}

bool binomial_in_toric(const PPolynomial& b, const MatchingField& field) {
  if (b.k != field.k() || b.n != field.n()) fail(ErrorCode::DimensionMismatch, "binomial_in_toric: (k, n) mismatch");
  PPolynomial p = b;
  p.normalize();
  if (p.terms.empty()) return true;
  if (p.terms.size() != 2) fail(ErrorCode::NotBinomial, "binomial_in_toric: expected two terms, got " + to_string(p));
  const ExponentMatrix a = exponent_matrix(field);
  const Term &t1 = p.terms[0], &t2 = p.terms[1];
  if (monomial_image(a, t1.exps) != monomial_image(a, t2.exps)) return false;
  // s(a)·c₁ + s(b)·c₂ = 0 under the signed monomial map.
  const int s1 = monomial_sign(field, t1.exps), s2 = monomial_sign(field, t2.exps);
  return s1 * t1.coeff + s2 * t2.coeff == 0;
}

bool span_contains(const std::vector<PPolynomial>& b, const std::vector<PPolynomial>& a) {
  std::map<std::vector<int>, std::size_t> index;
  auto col = [&](const std::vector<int>& e) { return index.emplace(support(e), index.size()).first->second; };
  for (const auto& p : b)
    for (const auto& t : p.terms) col(t.exps);
  for (const auto& p : a)
    for (const auto& t : p.terms) col(t.exps);
  auto to_row = [&](const PPolynomial& p) {
    RatVec r(index.size(), Rat(0));
    for (const auto& t : p.terms) r[index.at(support(t.exps))] += t.coeff;
    return r;
  };
  RatMatrix mb;
  for (const auto& p : b) mb.push_back(to_row(p));
  const std::size_t base = rank(mb, index.size());
  for (const auto& p : a) {
    RatMatrix m = mb;
    m.push_back(to_row(p));
    if (rank(m, index.size()) != base) return false;
  }
  return true;
}

InclusionReport inclusion_check(const MatchingField& field, const WeightMatrix& m) {
  const int k = field.k(), n = field.n();
  if (!(induced_matching_field(m, k, n) == field))
    fail(ErrorCode::Precondition, "inclusion_check: weight matrix does not induce the matching field");
  check_desk_scale(k, n, 4, 8, "inclusion_check");
  const PlueckerWeightVector w = induced_weight_vector(m, k, n);
  const auto subsets = enumerate_subsets(k, n);
  InclusionReport rep;
  for (const auto& [key, members] : content_groups(subsets)) {
    if (members.size() < 2) continue;
    RatMatrix ker = group_kernel(subsets, members);
    if (ker.empty()) continue;
    // Reduce with members ordered by weight so initial forms of the rows
    // form a basis of the initial space.
    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto weight = [&](std::size_t i) { return w.weights[members[i].first] + w.weights[members[i].second]; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return weight(x) < weight(y); });
    RatMatrix permuted;
    for (const auto& row : ker) {
      RatVec r;
      for (auto i : order) r.push_back(row[i]);
      permuted.push_back(std::move(r));
    }
    for (const auto& row : rref(permuted, members.size()).rows) {
      IntVec prim = primitive(row);
      IntVec coeffs(members.size());
      for (std::size_t i = 0; i < order.size(); ++i) coeffs[order[i]] = prim[i];
      InclusionEntry e;
      e.relation = from_vector(k, n, subsets.size(), members, coeffs);
      e.initial = initial_form(e.relation, w);
      e.binomial = e.initial.terms.size() == 2;
      e.in_toric = e.binomial && binomial_in_toric(e.initial, field);
      if (!e.binomial) rep.all_binomial = false;
      if (!e.in_toric) rep.all_in_toric = false;
      if (!e.binomial || !e.in_toric) rep.failures.push_back(rep.entries.size());
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

DegenCertificate degeneration_certificate(const MatchingField& field, const WeightMatrix& m,
                                          const std::string& field_id) {
  DegenCertificate c;
  c.field_id = field_id;
  InclusionReport rep = inclusion_check(field, m);
  c.relation_count = rep.entries.size();
  c.all_deg2_initials_binomial = rep.all_binomial;
  c.all_deg2_initials_in_J = rep.all_in_toric;
  c.volume = matching_field_polytope(field).normalized_volume();
  c.reference_volume = matching_field_polytope(block_diagonal(field.k(), field.n(), 0)).normalized_volume();
  c.volume_matches_reference = c.volume == c.reference_volume;
  c.verdict = c.certified() ? "certified (desk scale)" : "not certified";
  return c;
}

}  // namespace mfmut
