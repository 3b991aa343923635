#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfmut/error.hpp"
#include "mfmut/serialize.hpp"

using namespace mfmut;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("rationals use the p/q encoding") {
  CHECK(rat_json(Rat(1, 2)) == "1/2");
  CHECK(rat_json(7LL) == "7/1");
  CHECK(rat_json(Int(-4)) == "-4/1");
  CHECK(rat_from_json(Json("-2/4")) == Rat(-1, 2));
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK(code_of([] { rat_from_json(Json("1/0")); }) == ErrorCode::Parse);
  CHECK(code_of([] { rat_from_json(Json(true)); }) == ErrorCode::Parse);
}

TEST_CASE("matching fields round-trip") {
  for (auto f : {block_diagonal(3, 6, 2), intermediate(3, 6, 1, 4), block_diagonal(4, 7, 3)}) {
    auto j = to_json(f);
    CHECK(field_from_json(j) == f);
    CHECK(to_json(field_from_json(j)).dump() == j.dump());
  }
  auto j = to_json(block_diagonal(3, 5, 1));
  CHECK(j["entries"][0]["subset"] == Json({1, 2, 3}));
  CHECK(j["entries"][0]["perm"] == Json({2, 1, 3}));
}

TEST_CASE("malformed matching fields are parse errors") {
  auto j = to_json(block_diagonal(3, 5, 1));
  auto short_j = j;
  short_j["entries"].erase(0);
  CHECK(code_of([&] { field_from_json(short_j); }) == ErrorCode::Parse);
  auto dup = j;
  dup["entries"][1] = dup["entries"][0];
  CHECK(code_of([&] { field_from_json(dup); }) == ErrorCode::Parse);
  CHECK(code_of([] { field_from_json(Json::parse(R"({"k": 3})")); }) == ErrorCode::Parse);
  auto bad_perm = j;
  bad_perm["entries"][0]["perm"] = Json({1, 1, 2});
  CHECK_THROWS_AS(field_from_json(bad_perm), Error);
}

TEST_CASE("weight matrices round-trip") {
  auto m = m_ell_lambda(3, 6, 1, 4);
  auto j = to_json(m);
  CHECK(weights_from_json(j).entries() == m.entries());
  CHECK(j["entries"][1][0] == m.at(2, 1));
  auto bad = j;
  bad["entries"][0].erase(0);
  CHECK(code_of([&] { weights_from_json(bad); }) == ErrorCode::Parse);
  bad = j;
  bad["entries"][0][0] = "1/2";
  CHECK(code_of([&] { weights_from_json(bad); }) == ErrorCode::NonIntegral);
}

TEST_CASE("weight vectors") {
  auto w = induced_weight_vector(m_ell(3, 5, 1), 3, 5);
  CHECK(to_json(w).dump() == R"(["7/1","5/1","3/1","5/1","3/1","3/1","8/1","6/1","5/1","5/1"])");
}

TEST_CASE("polytopes round-trip") {
  auto p = matching_field_polytope(block_diagonal(3, 5, 1));
  auto j = to_json(p);
  auto q = polytope_from_json(j);
  CHECK(q.points() == p.points());
  CHECK(q.normalized_volume() == 5);
  CHECK(j["ambient_dim"] == 15);
  auto half = Json::parse(R"({"ambient_dim": 2, "points": [["0/1","0/1"],["1/2","0/1"]]})");
  CHECK(polytope_from_json(half).points()[1][0] == Rat(1, 2));
  auto bad = Json::parse(R"({"ambient_dim": 2, "points": [["0/1"]]})");
  CHECK(code_of([&] { polytope_from_json(bad); }) == ErrorCode::Parse);
}

TEST_CASE("polynomials round-trip") {
  auto p = make_poly(3, 5, {{1, {"145", "235"}}, {-1, {"135", "245"}}, {1, {"125", "345"}}});
  auto j = to_json(p);
  CHECK(poly_from_json(j) == p);
  j["terms"][0]["exps"]["126"] = 1;
  CHECK(code_of([&] { poly_from_json(j); }) == ErrorCode::Parse);
}

TEST_CASE("step logs carry one report per step") {
  auto steps = plan(3, 5, 0, 1);
  auto reports = execute_and_verify(steps, block_diagonal(3, 5, 0));
  auto log = step_log(steps, reports);
  REQUIRE(log.size() == 3);
  for (const auto& e : log) CHECK(e["report"]["passed"] == true);
  CHECK(log[1]["kind"] == "tropical");
}

TEST_CASE("certificates serialize their verdict") {
  auto c = degeneration_certificate(block_diagonal(3, 5, 1), m_ell(3, 5, 1), "B_1");
  auto j = to_json(c);
  CHECK(j["field_id"] == "B_1");
  CHECK(j["volume"] == "5/1");
  CHECK(j["verdict"] == "certified (desk scale)");
}
