#ifndef MFMUT_H
#define MFMUT_H

#include <stddef.h>

#if defined(MFMUT_BUILDING)
#define MFMUT_API __attribute__((visibility("default")))
#else
#define MFMUT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfmut_status {
  MFMUT_OK = 0,
  MFMUT_E_INVALID_PARAMETERS = 1,
  MFMUT_E_NOT_COHERENT = 2,
  MFMUT_E_DIMENSION_MISMATCH = 3,
  MFMUT_E_NON_INTEGRAL = 4,
  MFMUT_E_LOWER_DIMENSIONAL = 5,
  MFMUT_E_NOT_A_VERTEX = 6,
  MFMUT_E_NOT_BINOMIAL = 7,
  MFMUT_E_SCALE_EXCEEDED = 8,
  MFMUT_E_PRECONDITION = 9,
  MFMUT_E_VERIFICATION_FAILED = 10,
  MFMUT_E_PARSE = 11,
  MFMUT_E_OVERFLOW = 12,
  MFMUT_E_INTERNAL = 13,
  MFMUT_E_NULL_ARGUMENT = 14
} mfmut_status;

typedef struct mfmut_field mfmut_field;
typedef struct mfmut_weights mfmut_weights;
typedef struct mfmut_polytope mfmut_polytope;
typedef struct mfmut_plan mfmut_plan;

/* Message of the last failed call on this thread; empty after success. */
MFMUT_API const char* mfmut_last_error(void);
MFMUT_API const char* mfmut_status_string(mfmut_status status);
MFMUT_API const char* mfmut_version(void);
/* Releases strings returned through char** out-parameters. */
MFMUT_API void mfmut_string_free(char* s);

MFMUT_API mfmut_status mfmut_field_block_diagonal(int k, int n, int ell, mfmut_field** out);
MFMUT_API mfmut_status mfmut_field_intermediate(int k, int n, int ell, int lambda, mfmut_field** out);
MFMUT_API mfmut_status mfmut_field_from_json(const char* json, mfmut_field** out);
MFMUT_API mfmut_status mfmut_field_to_json(const mfmut_field* field, char** out);
MFMUT_API mfmut_status mfmut_field_equal(const mfmut_field* a, const mfmut_field* b, int* out);
MFMUT_API void mfmut_field_free(mfmut_field* field);

MFMUT_API mfmut_status mfmut_weights_block(int k, int n, int ell, mfmut_weights** out);
MFMUT_API mfmut_status mfmut_weights_intermediate(int k, int n, int ell, int lambda, mfmut_weights** out);
MFMUT_API mfmut_status mfmut_weights_from_json(const char* json, mfmut_weights** out);
MFMUT_API mfmut_status mfmut_weights_to_json(const mfmut_weights* w, char** out);
MFMUT_API mfmut_status mfmut_weights_is_coherent(const mfmut_weights* w, int k, int n, int* out);
MFMUT_API mfmut_status mfmut_weights_induced_field(const mfmut_weights* w, int k, int n, mfmut_field** out);
/* JSON array of "p/q" strings in subset order. */
MFMUT_API mfmut_status mfmut_weights_induced_vector(const mfmut_weights* w, int k, int n, char** out);
MFMUT_API void mfmut_weights_free(mfmut_weights* w);

MFMUT_API mfmut_status mfmut_polytope_of_field(const mfmut_field* field, mfmut_polytope** out);
MFMUT_API mfmut_status mfmut_polytope_from_json(const char* json, mfmut_polytope** out);
MFMUT_API mfmut_status mfmut_polytope_to_json(const mfmut_polytope* p, char** out);
MFMUT_API mfmut_status mfmut_polytope_dimension(const mfmut_polytope* p, size_t* out);
MFMUT_API mfmut_status mfmut_polytope_vertex_count(const mfmut_polytope* p, size_t* out);
/* Normalized lattice volume as a decimal integer string. */
MFMUT_API mfmut_status mfmut_polytope_volume(const mfmut_polytope* p, char** out);
MFMUT_API mfmut_status mfmut_polytope_lattice_point_count(const mfmut_polytope* p, size_t* out);
MFMUT_API void mfmut_polytope_free(mfmut_polytope* p);

MFMUT_API mfmut_status mfmut_plan_create(int k, int n, int ell_from, int ell_to, mfmut_plan** out);
MFMUT_API mfmut_status mfmut_plan_step_count(const mfmut_plan* plan, size_t* out);
/* Runs every step from B_from; *all_passed is 1 iff no report has failures.
   Verification failures are reported through the log, not the status. */
MFMUT_API mfmut_status mfmut_plan_execute(const mfmut_plan* plan, int ehrhart, int* all_passed, char** log_json);
MFMUT_API void mfmut_plan_free(mfmut_plan* plan);

MFMUT_API mfmut_status mfmut_certify(const mfmut_field* field, const mfmut_weights* w, const char* field_id,
                                     int* certified, char** json);

#ifdef __cplusplus
}
#endif

#endif
