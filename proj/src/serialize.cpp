#include "mfmut/serialize.hpp"

#include "mfmut/error.hpp"

namespace mfmut {
namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

Json int_vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

}  // namespace

Json rat_json(const Rat& r) { return to_string(r); }
Json rat_json(const Int& z) { return to_string(Rat(z)); }
Json rat_json(long long v) { return std::to_string(v) + "/1"; }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  fail(ErrorCode::Parse, "expected a \"p/q\" rational");
}

Json to_json(const MatchingField& f) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    entries.push_back({{"subset", f.subsets()[i].elements()}, {"perm", f.at(i).images()}});
  return {{"k", f.k()}, {"n", f.n()}, {"entries", entries}};
}

MatchingField field_from_json(const Json& j) {
  return guarded("matching field", [&] {
    const int k = j.at("k").get<int>(), n = j.at("n").get<int>();
    auto subsets = enumerate_subsets(k, n);
    std::vector<Perm> perms(subsets.size());
    std::vector<bool> seen(subsets.size(), false);
    const auto& entries = j.at("entries");
    if (entries.size() != subsets.size())
      fail(ErrorCode::Parse, "matching field: expected one entry per k-subset");
    for (const auto& e : entries) {
      KSubset s(e.at("subset").get<std::vector<int>>(), n);
      if (s.k() != k) fail(ErrorCode::Parse, "matching field: subset of wrong size");
      std::size_t r = subset_rank(s);
      if (seen[r]) fail(ErrorCode::Parse, "matching field: repeated subset");
      seen[r] = true;
      perms[r] = Perm(e.at("perm").get<std::vector<int>>());
    }
    return MatchingField(k, n, std::move(perms));
  });
}

Json to_json(const WeightMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return {{"k", m.rows()}, {"n", m.cols()}, {"entries", rows}};
}

WeightMatrix weights_from_json(const Json& j) {
  return guarded("weight matrix", [&] {
    const int k = j.at("k").get<int>(), n = j.at("n").get<int>();
    std::vector<std::int64_t> e;
    const auto& rows = j.at("entries");
    if (rows.size() != static_cast<std::size_t>(k)) fail(ErrorCode::Parse, "weight matrix: wrong row count");
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(n)) fail(ErrorCode::Parse, "weight matrix: wrong column count");
      for (const auto& x : row) e.push_back(to_int64(rat_from_json(x)));
    }
    return WeightMatrix(k, n, std::move(e));
  });
}

Json to_json(const PlueckerWeightVector& w) {
  Json a = Json::array();
  for (auto x : w.weights) a.push_back(rat_json(static_cast<long long>(x)));
  return a;
}

Json to_json(const VPolytope& p) {
  Json pts = Json::array();
  for (const auto& x : p.points()) {
    Json row = Json::array();
    for (const auto& c : x) row.push_back(rat_json(c));
    pts.push_back(row);
  }
  return {{"ambient_dim", p.ambient_dim()}, {"points", pts}};
}

VPolytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&] {
    const std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      Point p;
      for (const auto& c : row) p.push_back(rat_from_json(c));
      if (p.size() != dim) fail(ErrorCode::Parse, "polytope: point has wrong dimension");
      pts.push_back(std::move(p));
    }
    return VPolytope(std::move(pts));
  });
}

Json to_json(const PPolynomial& p) {
  const auto subsets = enumerate_subsets(p.k, p.n);
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) exps[subsets[i].label()] = t.exps[i];
    terms.push_back({{"coeff", rat_json(t.coeff)}, {"exps", exps}});
  }
  return {{"k", p.k}, {"n", p.n}, {"terms", terms}};
}

PPolynomial poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const int k = j.at("k").get<int>(), n = j.at("n").get<int>();
    const auto subsets = enumerate_subsets(k, n);
    PPolynomial p{k, n, {}};
    for (const auto& t : j.at("terms")) {
      std::vector<int> e(subsets.size(), 0);
      for (const auto& [key, val] : t.at("exps").items()) {
        auto it = std::find_if(subsets.begin(), subsets.end(), [&](const KSubset& s) { return s.label() == key; });
        if (it == subsets.end()) fail(ErrorCode::Parse, "polynomial: unknown variable " + key);
        e[static_cast<std::size_t>(it - subsets.begin())] += val.get<int>();
      }
      p.terms.push_back({rat_from_json(t.at("coeff")), std::move(e)});
    }
    p.normalize();
    return p;
  });
}

Json to_json(const MutationStep& s) {
  Json j = {{"kind", to_string(s.kind)},
            {"label", s.label},
            {"source_projection", label(s.source_projection)},
            {"target_projection", label(s.target_projection)},
            {"reversed", s.reversed}};
  if (s.kind == StepKind::Tropical) {
    j["w"] = int_vec_json(s.tropical.w);
    j["f_tilde"] = int_vec_json(s.tropical.f_tilde);
  } else if (s.kind == StepKind::Shear) {
    Json m = Json::array();
    for (const auto& row : s.map.matrix) m.push_back(int_vec_json(row));
    j["matrix"] = m;
  }
  Json f = to_json(s.expected_target);
  f["label"] = s.expected_label;
  j["expected_field"] = f;
  return j;
}

Json to_json(const StepReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(f);
  Json j = {{"passed", r.passed()},
            {"vertex_set_match", r.vertex_set_match},
            {"volume_before", rat_json(r.volume_before)},
            {"volume_after", rat_json(r.volume_after)},
            {"convexity_certified", r.convexity_certified},
            {"vertex_count_before", rat_json(static_cast<long long>(r.vertex_count_before))},
            {"vertex_count_after", rat_json(static_cast<long long>(r.vertex_count_after))}};
  if (r.kind == StepKind::Tropical) {
    j["volume_plus"] = rat_json(r.volume_plus);
    j["volume_minus"] = rat_json(r.volume_minus);
    j["inner_product_classes"] = {{"-1", rat_json(static_cast<long long>(r.inner_product_classes.minus))},
                                  {"0", rat_json(static_cast<long long>(r.inner_product_classes.zero))},
                                  {"+1", rat_json(static_cast<long long>(r.inner_product_classes.plus))}};
    j["inner_products_in_range"] = r.inner_products_in_range;
    j["classes_match"] = r.classes_match;
    j["crossing_pairs_checked"] = rat_json(static_cast<long long>(r.crossing_pairs_checked));
    j["crossing_edges"] = rat_json(static_cast<long long>(r.crossing_edges));
  } else {
    j["map_determinant"] = rat_json(r.map_determinant);
  }
  j["lattice_points"] = {
      {"dilation_1", r.lattice_points_1 ? rat_json(static_cast<long long>(*r.lattice_points_1)) : Json(nullptr)},
      {"dilation_2", r.lattice_points_2 ? rat_json(static_cast<long long>(*r.lattice_points_2)) : Json(nullptr)}};
  j["failures"] = failures;
  return j;
}

Json step_log(const std::vector<MutationStep>& steps, const std::vector<StepReport>& reports) {
  Json out = Json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Json j = to_json(steps[i]);
    if (i < reports.size()) j["report"] = to_json(reports[i]);
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const InclusionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"relation", to_json(e.relation)},
                       {"initial", to_json(e.initial)},
                       {"binomial", e.binomial},
                       {"in_toric", e.in_toric}});
  return {{"all_binomial", r.all_binomial}, {"all_in_toric", r.all_in_toric}, {"entries", entries}};
}

Json to_json(const DegenCertificate& c) {
  return {{"field_id", c.field_id},
          {"volume", rat_json(c.volume)},
          {"reference_volume", rat_json(c.reference_volume)},
          {"volume_matches_reference", c.volume_matches_reference},
          {"relation_count", rat_json(static_cast<long long>(c.relation_count))},
          {"all_deg2_initials_binomial", c.all_deg2_initials_binomial},
          {"all_deg2_initials_in_J", c.all_deg2_initials_in_J},
          {"verdict", c.verdict}};
}

}  // namespace mfmut
