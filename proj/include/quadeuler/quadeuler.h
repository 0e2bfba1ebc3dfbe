/* quadeuler: quadratic Euler characteristics and conductor identities.
 *
 * All functions return a qe_status. On failure, qe_last_error() and
 * qe_last_error_kind() describe the error for the calling thread.
 * Strings returned through char** must be released with qe_string_free;
 * handles with their destroy function.
 */
#ifndef QUADEULER_H
#define QUADEULER_H

#include <stddef.h>

#if defined(_WIN32)
#define QE_API __declspec(dllexport)
#else
#define QE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qe_status {
  QE_OK = 0,
  QE_ERR_USER = 1,     /* parse or validation error */
  QE_ERR_MATH = 2,     /* mathematical precondition violated */
  QE_ERR_INTERNAL = 3  /* invariant breach */
} qe_status;

typedef struct qe_poly qe_poly;
typedef struct qe_gwclass qe_gwclass;

typedef enum qe_form_kind {
  QE_FORM_FULL = 0,
  QE_FORM_PRIMITIVE = 1,
  QE_FORM_DEGREES = 2
} qe_form_kind;

QE_API const char* qe_version(void);
QE_API const char* qe_last_error(void);
QE_API const char* qe_last_error_kind(void);
QE_API void qe_string_free(char* s);

/* field: "Q", "Fp:<p>", "Qt", "Fpt:<p>"; vars and weights comma-separated. */
QE_API qe_status qe_poly_parse(const char* field, const char* vars, const char* weights, const char* src, qe_poly** out);
QE_API qe_status qe_poly_to_string(const qe_poly* p, char** out);
QE_API void qe_poly_destroy(qe_poly* p);

/* strategy: "lowest", "highest" or "hessian". */
QE_API qe_status qe_jacobian_report(const qe_poly* f, const char* strategy, char** json_out);
QE_API qe_status qe_gram(const qe_poly* f, const int* degrees, size_t count, char** json_out);
QE_API qe_status qe_jacobian_form(const qe_poly* f, qe_form_kind kind, const int* degrees, size_t count, qe_gwclass** out);

QE_API qe_status qe_chi(const qe_poly* f, qe_gwclass** out, char** report_json);
QE_API qe_status qe_chi_c_cone(const qe_poly* f, qe_gwclass** out, char** report_json);

QE_API qe_status qe_conductor(const qe_poly* f, char** json_out, int* equal);
/* Writes one JSON report per line; *all_equal is 1 iff every family passed. */
QE_API qe_status qe_conductor_corpus(const char* path, unsigned threads, char** jsonl_out, int* all_equal);

/* a is a rational number in text form. */
QE_API qe_status qe_trace_dim0(int e, const char* a, qe_gwclass** out);
QE_API qe_status qe_delta_dim0(int e, const char* a, char** json_out, int* equal);

/* Comma list of entries; "H"/"kH" adds hyperbolic planes, "~u" subtracts <u>. */
QE_API qe_status qe_gw_from_entries(const char* field, const char* entries, qe_gwclass** out);
QE_API qe_status qe_gw_from_json(const char* json, qe_gwclass** out);
/* matrix: rows separated by ';', entries by ','. */
QE_API qe_status qe_gw_diagonalize(const char* field, const char* matrix, qe_gwclass** out, char** transform_json);
QE_API qe_status qe_gw_equal(const qe_gwclass* a, const qe_gwclass* b, int* equal, char** certificate_json);
QE_API qe_status qe_gw_add(const qe_gwclass* a, const qe_gwclass* b, qe_gwclass** out);
QE_API qe_status qe_gw_sub(const qe_gwclass* a, const qe_gwclass* b, qe_gwclass** out);
QE_API qe_status qe_gw_specialize(const qe_gwclass* q, qe_gwclass** out);
/* sp_t on each listed entry separately, order kept: "t, -6*t, 2+t" -> "1, -6, 2". */
QE_API qe_status qe_gw_specialize_entries(const char* field, const char* entries, char** out);
QE_API qe_status qe_gw_to_json(const qe_gwclass* q, char** out);
QE_API qe_status qe_gw_to_string(const qe_gwclass* q, char** out);
/* rank, signature, discriminant and Hasse invariants (over Q). */
QE_API qe_status qe_gw_invariants(const qe_gwclass* q, char** json_out);
QE_API qe_status qe_gw_rank(const qe_gwclass* q, long* out);
QE_API void qe_gw_destroy(qe_gwclass* q);

#ifdef __cplusplus
}
#endif

#endif /* QUADEULER_H */
