#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "mfmut/mfmut.h"

namespace {

/// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  mfmut_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(mfmut_status_string(MFMUT_OK)) == "ok");
  CHECK(std::string(mfmut_status_string(MFMUT_E_NOT_COHERENT)) == "not-coherent");
  CHECK(std::string(mfmut_version()) == "0.1.0");
}

TEST_CASE("null arguments and invalid parameters") {
  CHECK(mfmut_field_block_diagonal(3, 5, 1, nullptr) == MFMUT_E_NULL_ARGUMENT);
  mfmut_field* f = nullptr;
  CHECK(mfmut_field_block_diagonal(3, 5, 9, &f) == MFMUT_E_INVALID_PARAMETERS);
  CHECK(f == nullptr);
  CHECK(std::string(mfmut_last_error()).size() > 0);
  CHECK(mfmut_field_intermediate(3, 5, 1, 5, &f) == MFMUT_E_INVALID_PARAMETERS);
  mfmut_plan* p = nullptr;
  CHECK(mfmut_plan_create(3, 5, 0, 5, &p) == MFMUT_E_INVALID_PARAMETERS);
  CHECK(mfmut_field_from_json("{not json", &f) == MFMUT_E_PARSE);
  mfmut_field_free(nullptr);
  mfmut_string_free(nullptr);
}

TEST_CASE("field JSON round-trips byte for byte") {
  mfmut_field* f = nullptr;
  REQUIRE(mfmut_field_intermediate(3, 6, 2, 7, &f) == MFMUT_OK);
  char* s = nullptr;
  REQUIRE(mfmut_field_to_json(f, &s) == MFMUT_OK);
  std::string text = take(s);
  mfmut_field* g = nullptr;
  REQUIRE(mfmut_field_from_json(text.c_str(), &g) == MFMUT_OK);
  int eq = 0;
  CHECK(mfmut_field_equal(f, g, &eq) == MFMUT_OK);
  CHECK(eq == 1);
  REQUIRE(mfmut_field_to_json(g, &s) == MFMUT_OK);
  CHECK(take(s) == text);
  mfmut_field_free(f);
  mfmut_field_free(g);
}

TEST_CASE("weights induce the named field and its weight vector") {
  mfmut_weights* w = nullptr;
  REQUIRE(mfmut_weights_block(3, 5, 1, &w) == MFMUT_OK);
  int coherent = 0;
  CHECK(mfmut_weights_is_coherent(w, 3, 5, &coherent) == MFMUT_OK);
  CHECK(coherent == 1);
  mfmut_field* induced = nullptr;
  mfmut_field* b1 = nullptr;
  REQUIRE(mfmut_weights_induced_field(w, 3, 5, &induced) == MFMUT_OK);
  REQUIRE(mfmut_field_block_diagonal(3, 5, 1, &b1) == MFMUT_OK);
  int eq = 0;
  mfmut_field_equal(induced, b1, &eq);
  CHECK(eq == 1);
  char* s = nullptr;
  REQUIRE(mfmut_weights_induced_vector(w, 3, 5, &s) == MFMUT_OK);
  CHECK(take(s) == R"(["7/1","5/1","3/1","5/1","3/1","3/1","8/1","6/1","5/1","5/1"])");

  mfmut_weights* zero = nullptr;
  REQUIRE(mfmut_weights_from_json(R"({"k":3,"n":5,"entries":[[0,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0]]})", &zero) ==
          MFMUT_OK);
  mfmut_field* none = nullptr;
  CHECK(mfmut_weights_induced_field(zero, 3, 5, &none) == MFMUT_E_NOT_COHERENT);
  mfmut_weights_free(zero);
  mfmut_weights_free(w);
  mfmut_field_free(induced);
  mfmut_field_free(b1);
}

TEST_CASE("polytope queries") {
  mfmut_field* f = nullptr;
  REQUIRE(mfmut_field_block_diagonal(3, 6, 0, &f) == MFMUT_OK);
  mfmut_polytope* p = nullptr;
  REQUIRE(mfmut_polytope_of_field(f, &p) == MFMUT_OK);
  std::size_t dim = 0, verts = 0, pts = 0;
  CHECK(mfmut_polytope_dimension(p, &dim) == MFMUT_OK);
  CHECK(dim == 9);
  CHECK(mfmut_polytope_vertex_count(p, &verts) == MFMUT_OK);
  CHECK(verts == 20);
  CHECK(mfmut_polytope_lattice_point_count(p, &pts) == MFMUT_OK);
  CHECK(pts == 20);
  char* s = nullptr;
  REQUIRE(mfmut_polytope_volume(p, &s) == MFMUT_OK);
  CHECK(take(s) == "42");

  REQUIRE(mfmut_polytope_to_json(p, &s) == MFMUT_OK);
  std::string text = take(s);
  mfmut_polytope* q = nullptr;
  REQUIRE(mfmut_polytope_from_json(text.c_str(), &q) == MFMUT_OK);
  REQUIRE(mfmut_polytope_to_json(q, &s) == MFMUT_OK);
  CHECK(take(s) == text);
  CHECK(mfmut_polytope_from_json(R"({"ambient_dim":2,"points":[["0/1","0/1"],["1/1"]]})", &q) != MFMUT_OK);
  mfmut_polytope_free(p);
  mfmut_polytope_free(q);
  mfmut_field_free(f);
}

TEST_CASE("plan execution") {
  mfmut_plan* p = nullptr;
  REQUIRE(mfmut_plan_create(3, 5, 0, 1, &p) == MFMUT_OK);
  std::size_t steps = 0;
  CHECK(mfmut_plan_step_count(p, &steps) == MFMUT_OK);
  CHECK(steps == 3);
  int passed = 0;
  char* log = nullptr;
  REQUIRE(mfmut_plan_execute(p, 0, &passed, &log) == MFMUT_OK);
  CHECK(passed == 1);
  auto j = nlohmann::json::parse(take(log));
  REQUIRE(j.size() == 3);
  CHECK(j[1]["report"]["inner_product_classes"]["0"] == "7/1");
  mfmut_plan_free(p);
}

TEST_CASE("certificates") {
  mfmut_field* f = nullptr;
  mfmut_weights* w = nullptr;
  REQUIRE(mfmut_field_block_diagonal(3, 5, 1, &f) == MFMUT_OK);
  REQUIRE(mfmut_weights_block(3, 5, 1, &w) == MFMUT_OK);
  int ok = 0;
  char* s = nullptr;
  REQUIRE(mfmut_certify(f, w, "B_1", &ok, &s) == MFMUT_OK);
  CHECK(ok == 1);
  CHECK(nlohmann::json::parse(take(s))["field_id"] == "B_1");
  mfmut_weights* w0 = nullptr;
  REQUIRE(mfmut_weights_block(3, 5, 0, &w0) == MFMUT_OK);
  CHECK(mfmut_certify(f, w0, "B_1", &ok, &s) == MFMUT_E_PRECONDITION);
  mfmut_weights_free(w0);
  mfmut_weights_free(w);
  mfmut_field_free(f);
}
