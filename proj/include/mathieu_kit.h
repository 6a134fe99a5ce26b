#ifndef MATHIEU_KIT_H
#define MATHIEU_KIT_H

/*
 * C interface to the Mathieu subspace toolkit.
 *
 * Every call returns an mk_status: MK_OK (0) or one of the error codes below.
 * On failure the thread-local message is available from mk_last_error().
 * Strings returned through char** are heap allocated JSON documents and must
 * be released with mk_string_free. Handles are released with their _free
 * function; passing NULL to a _free function is a no-op.
 *
 * Theta names: "left", "right", "pre_two_sided", "two_sided".
 * Elements are JSON coordinate arrays (or {"coords": [...]}); subspaces are
 * {"basis": [[...], ...]} or a bare list of spanning vectors.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MK_API __declspec(dllexport)
#else
#  define MK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int mk_status;

enum {
  MK_OK = 0,
  MK_DIVISION_BY_ZERO = 1,
  MK_FIELD_MISMATCH = 2,
  MK_BOTH_ZERO = 3,
  MK_ZERO_POLYNOMIAL = 4,
  MK_NOT_ASSOCIATIVE = 5,
  MK_BAD_UNIT = 6,
  MK_NOT_MONIC = 7,
  MK_ALGEBRA_MISMATCH = 8,
  MK_NILPOTENT_INPUT = 9,
  MK_INVERTIBLE_INPUT = 10,
  MK_INFINITE_FIELD = 11,
  MK_NOT_AN_IDEAL = 12,
  MK_NOT_A_HOMOMORPHISM = 13,
  MK_TOO_LARGE = 14,
  MK_INFINITE_FIELD_NO_DECISION = 15,
  MK_NOT_IN_RADICAL = 16,
  MK_NOT_MATHIEU = 17,
  MK_NOT_COMMUTATIVE = 18,
  MK_ZERO_ELEMENT = 19,
  MK_ONLY_TRIVIAL = 20,
  MK_ZERO_DUAL = 21,
  MK_NOT_MATRIX_ALGEBRA = 22,
  MK_WRONG_CODIMENSION = 23,
  MK_SCALAR_DUAL = 24,
  MK_TOO_SMALL = 25,
  MK_NOT_PROPER = 26,
  MK_INVALID_ARGUMENT = 27,
  MK_PARSE_ERROR = 28,
  MK_INTERNAL = 29
};

typedef struct mk_algebra mk_algebra;
typedef struct mk_subspace mk_subspace;

typedef struct mk_scan_options {
  uint64_t max_scan; /* element evaluations per scan; 0 selects the default */
  unsigned jobs;     /* worker threads; 0 selects hardware concurrency */
} mk_scan_options;

/* Errors and memory. */
MK_API const char* mk_last_error(void);
MK_API const char* mk_status_name(mk_status status);
MK_API void mk_string_free(char* s);
MK_API uint64_t mk_default_max_scan(void);

/* Algebras: shorthand (mat:n:p, polyq:p:c0,...,1, dsum:A+B, opp:A,
 * field:p), catalog names, or JSON text. */
MK_API mk_status mk_algebra_parse(const char* spec, mk_algebra** out);
MK_API void mk_algebra_free(mk_algebra* a);
MK_API mk_status mk_algebra_dim(const mk_algebra* a, size_t* out);
MK_API mk_status mk_algebra_to_json(const mk_algebra* a, char** out);
/* {"label","dim","field","commutative","matrix_order"?} */
MK_API mk_status mk_algebra_info(const mk_algebra* a, char** out);
/* {"name","label","tags","provenance"} for every entry. */
MK_API mk_status mk_catalog(char** out);

/* Elements. */
MK_API mk_status mk_elem_minpoly(const mk_algebra* a, const char* elem, char** out);
MK_API mk_status mk_elem_classify(const mk_algebra* a, const char* elem, char** out);
MK_API mk_status mk_elem_pofa(const mk_algebra* a, const char* elem, char** out);
MK_API mk_status mk_elem_cycle(const mk_algebra* a, const char* elem, const mk_scan_options* opts, char** out);

/* Subspaces. */
MK_API mk_status mk_subspace_parse(const mk_algebra* a, const char* doc, mk_subspace** out);
MK_API void mk_subspace_free(mk_subspace* v);
MK_API mk_status mk_subspace_dim(const mk_subspace* v, size_t* out);
MK_API mk_status mk_subspace_to_json(const mk_subspace* v, char** out);

/* Verdict document {"is_mathieu","theta","method","witness"?}. */
MK_API mk_status mk_space_check(const mk_subspace* v, const char* theta, const mk_scan_options* opts, int* is_mathieu,
                                char** verdict);
MK_API mk_status mk_space_oracle(const mk_subspace* v, const char* theta, const mk_scan_options* opts, int* is_mathieu);
/* Replays a verdict document against v; *valid is 1 when its witness refutes. */
MK_API mk_status mk_space_verify_witness(const mk_subspace* v, const char* verdict, int* valid);
MK_API mk_status mk_space_radical_member(const mk_subspace* v, const char* elem, int* member);
MK_API mk_status mk_space_radical_enum(const mk_subspace* v, const mk_scan_options* opts, char** out);
/* Certificate document {"N","ideal_basis"}. */
MK_API mk_status mk_space_certify(const mk_subspace* v, const char* theta, const char* elem, const mk_scan_options* opts,
                                  char** out);
MK_API mk_status mk_space_max_ideal(const mk_subspace* v, const char* theta, mk_subspace** out);
MK_API mk_status mk_space_theta_ideal(const mk_algebra* a, const char* elem, const char* theta, mk_subspace** out);

/* Matrix algebras M_n(F_q). */
MK_API mk_status mk_mat_codim1(size_t n, uint32_t q, const mk_scan_options* opts, char** out);
MK_API mk_status mk_mat_lines(size_t n, uint32_t q, int with_oracle, const mk_scan_options* opts, char** out);
/* {"x"}: the canonical X with V = H_X. */
MK_API mk_status mk_mat_dual(const mk_subspace* v, char** out);
/* {"a","b"}: idempotents refuting H_X on the left and on the right. */
MK_API mk_status mk_mat_witness(const mk_algebra* a, const char* x, char** out);

/* Algebra-level classifications. */
MK_API mk_status mk_alg_quasi_stable(const mk_algebra* a, const mk_scan_options* opts, int* result);
MK_API mk_status mk_alg_stable(const mk_algebra* a, const mk_scan_options* opts, int* result);
MK_API mk_status mk_alg_find_ms(const mk_algebra* a, const mk_scan_options* opts, mk_subspace** out);

/* Suites: JSON lines, one object per check. *all_pass is 1 when every
 * check passed. */
MK_API mk_status mk_suite_names(char** out);
MK_API mk_status mk_suite_run(const char* name, uint64_t seed, int timing, const mk_scan_options* opts, char** out,
                              int* all_pass);
MK_API uint64_t mk_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif
