#include "mfmut/mfmut.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "mfmut/error.hpp"
#include "mfmut/serialize.hpp"

struct mfmut_field {
  mfmut::MatchingField value;
};
struct mfmut_weights {
  mfmut::WeightMatrix value;
};
struct mfmut_polytope {
  mfmut::VPolytope value;
};
struct mfmut_plan {
  int k, n, from, to;
  std::vector<mfmut::MutationStep> steps;
};

namespace {

thread_local std::string g_last_error;

mfmut_status to_status(mfmut::ErrorCode c) { return static_cast<mfmut_status>(static_cast<int>(c)); }

template <class F>
mfmut_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return MFMUT_OK;
  } catch (const mfmut::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return MFMUT_E_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MFMUT_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return MFMUT_E_INTERNAL;
  }
}

mfmut_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return MFMUT_E_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

#define MFMUT_REQUIRE(p) \
  if (!(p)) return null_arg(#p)

extern "C" {

MFMUT_API const char* mfmut_last_error(void) { return g_last_error.c_str(); }

MFMUT_API const char* mfmut_status_string(mfmut_status status) {
  if (status == MFMUT_OK) return "ok";
  if (status == MFMUT_E_NULL_ARGUMENT) return "null argument";
  if (status >= MFMUT_E_INVALID_PARAMETERS && status <= MFMUT_E_INTERNAL)
    return mfmut::to_string(static_cast<mfmut::ErrorCode>(status));
  return "unknown status";
}

MFMUT_API const char* mfmut_version(void) { return "0.1.0"; }

MFMUT_API void mfmut_string_free(char* s) { std::free(s); }

MFMUT_API mfmut_status mfmut_field_block_diagonal(int k, int n, int ell, mfmut_field** out) {
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_field{mfmut::block_diagonal(k, n, ell)}; });
}

MFMUT_API mfmut_status mfmut_field_intermediate(int k, int n, int ell, int lambda, mfmut_field** out) {
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_field{mfmut::intermediate(k, n, ell, lambda)}; });
}

MFMUT_API mfmut_status mfmut_field_from_json(const char* json, mfmut_field** out) {
  MFMUT_REQUIRE(json);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_field{mfmut::field_from_json(mfmut::Json::parse(json))}; });
}

MFMUT_API mfmut_status mfmut_field_to_json(const mfmut_field* field, char** out) {
  MFMUT_REQUIRE(field);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = dup(mfmut::to_json(field->value).dump()); });
}

MFMUT_API mfmut_status mfmut_field_equal(const mfmut_field* a, const mfmut_field* b, int* out) {
  MFMUT_REQUIRE(a);
  MFMUT_REQUIRE(b);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = a->value == b->value ? 1 : 0; });
}

MFMUT_API void mfmut_field_free(mfmut_field* field) { delete field; }

MFMUT_API mfmut_status mfmut_weights_block(int k, int n, int ell, mfmut_weights** out) {
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_weights{mfmut::m_ell(k, n, ell)}; });
}

MFMUT_API mfmut_status mfmut_weights_intermediate(int k, int n, int ell, int lambda, mfmut_weights** out) {
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_weights{mfmut::m_ell_lambda(k, n, ell, lambda)}; });
}

MFMUT_API mfmut_status mfmut_weights_from_json(const char* json, mfmut_weights** out) {
  MFMUT_REQUIRE(json);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_weights{mfmut::weights_from_json(mfmut::Json::parse(json))}; });
}

MFMUT_API mfmut_status mfmut_weights_to_json(const mfmut_weights* w, char** out) {
  MFMUT_REQUIRE(w);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = dup(mfmut::to_json(w->value).dump()); });
}

MFMUT_API mfmut_status mfmut_weights_is_coherent(const mfmut_weights* w, int k, int n, int* out) {
  MFMUT_REQUIRE(w);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = mfmut::is_coherent(w->value, k, n) ? 1 : 0; });
}

MFMUT_API mfmut_status mfmut_weights_induced_field(const mfmut_weights* w, int k, int n, mfmut_field** out) {
  MFMUT_REQUIRE(w);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_field{mfmut::induced_matching_field(w->value, k, n)}; });
}

MFMUT_API mfmut_status mfmut_weights_induced_vector(const mfmut_weights* w, int k, int n, char** out) {
  MFMUT_REQUIRE(w);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = dup(mfmut::to_json(mfmut::induced_weight_vector(w->value, k, n)).dump()); });
}

MFMUT_API void mfmut_weights_free(mfmut_weights* w) { delete w; }

MFMUT_API mfmut_status mfmut_polytope_of_field(const mfmut_field* field, mfmut_polytope** out) {
  MFMUT_REQUIRE(field);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_polytope{mfmut::matching_field_polytope(field->value)}; });
}

MFMUT_API mfmut_status mfmut_polytope_from_json(const char* json, mfmut_polytope** out) {
  MFMUT_REQUIRE(json);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_polytope{mfmut::polytope_from_json(mfmut::Json::parse(json))}; });
}

MFMUT_API mfmut_status mfmut_polytope_to_json(const mfmut_polytope* p, char** out) {
  MFMUT_REQUIRE(p);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = dup(mfmut::to_json(p->value).dump()); });
}

MFMUT_API mfmut_status mfmut_polytope_dimension(const mfmut_polytope* p, size_t* out) {
  MFMUT_REQUIRE(p);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = p->value.dimension(); });
}

MFMUT_API mfmut_status mfmut_polytope_vertex_count(const mfmut_polytope* p, size_t* out) {
  MFMUT_REQUIRE(p);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = p->value.vertices().size(); });
}

MFMUT_API mfmut_status mfmut_polytope_volume(const mfmut_polytope* p, char** out) {
  MFMUT_REQUIRE(p);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = dup(p->value.normalized_volume().get_str()); });
}

MFMUT_API mfmut_status mfmut_polytope_lattice_point_count(const mfmut_polytope* p, size_t* out) {
  MFMUT_REQUIRE(p);
  MFMUT_REQUIRE(out);
  return guard([&] { *out = mfmut::lattice_points(p->value).size(); });
}

MFMUT_API void mfmut_polytope_free(mfmut_polytope* p) { delete p; }

MFMUT_API mfmut_status mfmut_plan_create(int k, int n, int ell_from, int ell_to, mfmut_plan** out) {
  MFMUT_REQUIRE(out);
  return guard([&] { *out = new mfmut_plan{k, n, ell_from, ell_to, mfmut::plan(k, n, ell_from, ell_to)}; });
}

MFMUT_API mfmut_status mfmut_plan_step_count(const mfmut_plan* plan, size_t* out) {
  MFMUT_REQUIRE(plan);
  MFMUT_REQUIRE(out);
  *out = plan->steps.size();
  g_last_error.clear();
  return MFMUT_OK;
}

MFMUT_API mfmut_status mfmut_plan_execute(const mfmut_plan* plan, int ehrhart, int* all_passed, char** log_json) {
  MFMUT_REQUIRE(plan);
  MFMUT_REQUIRE(all_passed);
  return guard([&] {
    mfmut::VerifyOptions opts;
    opts.throw_on_failure = false;
    opts.ehrhart = ehrhart != 0;
    auto start = mfmut::block_diagonal(plan->k, plan->n, plan->from);
    auto reports = mfmut::execute_and_verify(plan->steps, start, opts);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    *all_passed = ok ? 1 : 0;
    if (log_json) *log_json = dup(mfmut::step_log(plan->steps, reports).dump());
  });
}

MFMUT_API void mfmut_plan_free(mfmut_plan* plan) { delete plan; }

MFMUT_API mfmut_status mfmut_certify(const mfmut_field* field, const mfmut_weights* w, const char* field_id,
                                     int* certified, char** json) {
  MFMUT_REQUIRE(field);
  MFMUT_REQUIRE(w);
  MFMUT_REQUIRE(certified);
  return guard([&] {
    auto c = mfmut::degeneration_certificate(field->value, w->value, field_id ? field_id : "");
    *certified = c.certified() ? 1 : 0;
    if (json) *json = dup(mfmut::to_json(c).dump());
  });
}

}  // extern "C"
