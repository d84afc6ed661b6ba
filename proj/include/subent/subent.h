/*
 * subent: operator-Schmidt entanglement of subspaces of a bipartite space.
 *
 * C interface. Every function returns a subent_status; on failure the
 * thread-local message from subent_last_error() describes the cause. Handles
 * are opaque, owned by the caller, and released with the matching *_destroy.
 *
 * Conventions:
 *  - complex numbers are interleaved (re, im) doubles;
 *  - the composite index of |i>|k> in H1 (x) H2 is i * d2 + k;
 *  - matrices are row-major.
 */
#ifndef SUBENT_SUBENT_H
#define SUBENT_SUBENT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SUBENT_BUILDING)
#    define SUBENT_API __declspec(dllexport)
#  else
#    define SUBENT_API __declspec(dllimport)
#  endif
#else
#  define SUBENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subent_status {
  SUBENT_OK = 0,
  SUBENT_ERR_INVALID_ARGUMENT = 1,
  SUBENT_ERR_DIMENSION_MISMATCH = 2,
  SUBENT_ERR_NOT_ORTHONORMAL = 3,
  SUBENT_ERR_NOT_HERMITIAN = 4,
  SUBENT_ERR_NOT_PROJECTOR = 5,
  SUBENT_ERR_NUMERICAL = 6,
  SUBENT_ERR_NOT_CONVERGED = 7,
  SUBENT_ERR_INVALID_HANDLE = 8,
  SUBENT_ERR_BUFFER_TOO_SMALL = 9,
  SUBENT_ERR_UNKNOWN = 10
} subent_status;

typedef enum subent_branch { SUBENT_BRANCH_PLUS = 0, SUBENT_BRANCH_MINUS = 1 } subent_branch;

typedef enum subent_family {
  SUBENT_FAMILY_ANTISYM = 0,
  SUBENT_FAMILY_SYM = 1,
  SUBENT_FAMILY_SPIN_PLUS = 2,
  SUBENT_FAMILY_SPIN_MINUS = 3
} subent_family;

/* Verdict of the first string relative to the second. */
typedef enum subent_verdict {
  SUBENT_MORE_ENTANGLED = 0,
  SUBENT_LESS_ENTANGLED = 1,
  SUBENT_EQUAL = 2,
  SUBENT_INCOMPARABLE = 3
} subent_verdict;

typedef struct subent_projector_s* subent_projector;
typedef struct subent_string_s* subent_string;
typedef struct subent_chain_s* subent_chain;
typedef struct subent_hydrogen_s* subent_hydrogen;
typedef struct subent_verify_s* subent_verify_result;

typedef struct subent_measures {
  double e_d; /* distance to the nearest product operator vector */
  double e_i; /* base-2 entropy of the Schmidt string */
  double e_t; /* 1 - sum p^2 */
} subent_measures;

typedef struct subent_projector_report {
  double hermiticity_defect;
  double idempotency_defect;
  double trace_defect;
  double trace;
  int passed;
} subent_projector_report;

typedef struct subent_consistency {
  double margin_d;
  double margin_i;
  double margin_t;
  int holds;
} subent_consistency;

typedef struct subent_verify_options {
  int max_n;
  int max_two_j;
  int max_hydrogen_n;
  double string_tol;
  double zero_threshold;
} subent_verify_options;

SUBENT_API const char* subent_last_error(void);
SUBENT_API const char* subent_status_string(subent_status status);
SUBENT_API const char* subent_verdict_string(subent_verdict verdict);
SUBENT_API const char* subent_version(void);

/* ---- projectors -------------------------------------------------------- */

/* `vectors` holds `count` vectors of d1*d2 complex entries each. With
 * orthonormalize != 0 the vectors go through Gram-Schmidt (drop_tol) first and
 * `dropped` (optional) receives the rank reduction; otherwise they must be
 * orthonormal already. */
SUBENT_API subent_status subent_projector_from_basis(size_t d1, size_t d2, size_t count, const double* vectors,
                                                     int orthonormalize, double drop_tol, size_t* dropped,
                                                     subent_projector* out);
/* `matrix` holds (d1*d2)^2 complex entries. */
SUBENT_API subent_status subent_projector_from_matrix(size_t d1, size_t d2, const double* matrix,
                                                      subent_projector* out);
SUBENT_API subent_status subent_projector_destroy(subent_projector* p);
SUBENT_API subent_status subent_projector_info(subent_projector p, size_t* d1, size_t* d2, size_t* dim);
SUBENT_API subent_status subent_projector_report_get(subent_projector p, subent_projector_report* report);
/* Report-only validation of an arbitrary n x n matrix (no handle needed). */
SUBENT_API subent_status subent_validate_matrix(size_t n, const double* matrix, subent_projector_report* report);
/* Copies the reduced superoperator matrix (side 1: d1^2 square, side 2: d2^2
 * square) into `buffer` of `capacity` complex entries; `rows` receives its order. */
SUBENT_API subent_status subent_reduced_superop(subent_projector p, int side, double* buffer, size_t capacity,
                                                size_t* rows);

/* Catalog presets. */
SUBENT_API subent_status subent_preset_antisym(int n, subent_projector* out);
SUBENT_API subent_status subent_preset_sym(int n, subent_projector* out);
SUBENT_API subent_status subent_preset_spin(int two_j, subent_branch branch, subent_projector* out);
SUBENT_API subent_status subent_preset_hydrogen(int n, int l, subent_branch branch, subent_projector* out);

/* ---- Schmidt strings --------------------------------------------------- */

SUBENT_API subent_status subent_schmidt_string(subent_projector p, double zero_threshold, subent_string* out);
/* Builds a string from raw values (sorted, thresholded, padded to length). */
SUBENT_API subent_status subent_string_from_values(size_t count, const double* values, size_t length,
                                                   double zero_threshold, subent_string* out);
SUBENT_API subent_status subent_closed_string(subent_family family, int parameter, subent_string* out);
SUBENT_API subent_status subent_limiting_string(subent_string* out);
SUBENT_API subent_status subent_string_destroy(subent_string* s);
SUBENT_API subent_status subent_string_length(subent_string s, size_t* length, size_t* k);
SUBENT_API subent_status subent_string_values(subent_string s, double* buffer, size_t capacity);
SUBENT_API subent_status subent_string_measures(subent_string s, subent_measures* out);
SUBENT_API subent_status subent_closed_measures(subent_family family, int parameter, subent_measures* out);

/* ---- majorization ------------------------------------------------------ */

SUBENT_API subent_status subent_compare(subent_string first, subent_string second, double tol,
                                        subent_verdict* verdict);
/* Partial sums after zero-padding both strings to `padded` = max length.
 * Either buffer may be NULL; otherwise it must hold max(length) doubles. */
SUBENT_API subent_status subent_compare_partial_sums(subent_string first, subent_string second, double* sums_first,
                                                     double* sums_second, size_t capacity, size_t* padded);
/* Requires first to be majorized by second. */
SUBENT_API subent_status subent_measure_consistency(subent_string first, subent_string second, double tol,
                                                    subent_consistency* out);

SUBENT_API subent_status subent_chain_sort(size_t count, const char* const* labels, const subent_string* strings,
                                           double tol, subent_chain* out);
SUBENT_API subent_status subent_chain_destroy(subent_chain* c);
SUBENT_API subent_status subent_chain_is_total(subent_chain c, int* total);
/* Ordered labels, least to most entangled (only when total). */
SUBENT_API subent_status subent_chain_size(subent_chain c, size_t* size);
SUBENT_API subent_status subent_chain_label(subent_chain c, size_t index, const char** label);
SUBENT_API subent_status subent_chain_tie_count(subent_chain c, size_t* count);
SUBENT_API subent_status subent_chain_tie(subent_chain c, size_t index, const char** a, const char** b);
SUBENT_API subent_status subent_chain_incomparable_count(subent_chain c, size_t* count);
SUBENT_API subent_status subent_chain_incomparable(subent_chain c, size_t index, const char** a, const char** b);

/* ---- hydrogen levels --------------------------------------------------- */

SUBENT_API subent_status subent_hydrogen_level(int n, subent_hydrogen* out);
SUBENT_API subent_status subent_hydrogen_destroy(subent_hydrogen* h);
SUBENT_API subent_status subent_hydrogen_size(subent_hydrogen h, size_t* count);
SUBENT_API subent_status subent_hydrogen_entry(subent_hydrogen h, size_t index, const char** label, int* l,
                                               subent_branch* branch, size_t* dim);
/* Closed-form string of entry `index`; caller owns the new handle. */
SUBENT_API subent_status subent_hydrogen_entry_string(subent_hydrogen h, size_t index, subent_string* out);
/* Expected least-to-most chain (including the limiting string label). */
SUBENT_API subent_status subent_hydrogen_expected_label(subent_hydrogen h, size_t index, const char** label);

/* ---- oracle verification ---------------------------------------------- */

SUBENT_API void subent_verify_options_default(subent_verify_options* options);
/* family: "all", "antisym", "sym", "spin" or "hydrogen". */
SUBENT_API subent_status subent_verify(const char* family, const subent_verify_options* options,
                                       subent_verify_result* out);
SUBENT_API subent_status subent_verify_destroy(subent_verify_result* v);
SUBENT_API subent_status subent_verify_size(subent_verify_result v, size_t* count);
SUBENT_API subent_status subent_verify_entry(subent_verify_result v, size_t index, const char** family, int* passed,
                                             int* cases, double* max_string_deviation,
                                             double* max_measure_deviation, double* max_reduced_deviation,
                                             const char** failure);

#ifdef __cplusplus
}
#endif

#endif /* SUBENT_SUBENT_H */
