/* C interface of the fermat library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returning int returns a fermat_status; on failure the
 * message (and, for parse errors, the byte offset) is available from
 * fermat_last_error_message / fermat_last_error_offset on the calling thread.
 * Strings handed out through char** are owned by the caller and released
 * with fermat_string_free.
 */
#ifndef FERMAT_FERMAT_H
#define FERMAT_FERMAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FERMAT_API __declspec(dllexport)
#else
#define FERMAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fermat_expr fermat_expr;
typedef struct fermat_equation fermat_equation;
typedef struct fermat_report fermat_report;

typedef enum fermat_status {
    FERMAT_OK = 0,
    FERMAT_ERR_INVALID_ARGUMENT = 1,
    FERMAT_ERR_PARSE = 2,
    FERMAT_ERR_DIVISION_BY_ZERO = 3,
    FERMAT_ERR_PRECONDITION = 4,
    FERMAT_ERR_DEGENERATE_DIFFERENCE = 5,
    FERMAT_ERR_CONSTRAINT_VIOLATION = 6,
    FERMAT_ERR_ALL_POINTS_REJECTED = 7,
    FERMAT_ERR_NOT_MONOMIAL_PAIR = 8,
    FERMAT_ERR_ZERO_BASE = 9,
    FERMAT_ERR_NO_SOLUTION_IN_FAMILY = 10,
    FERMAT_ERR_FAMILY_DEGENERATE = 11,
    FERMAT_ERR_EMPTY_FAMILY = 12,
    FERMAT_ERR_SIDE_CONDITION_FAILED = 13,
    FERMAT_ERR_VERIFICATION_FAILED = 14,
    FERMAT_ERR_POLE = 15,
    FERMAT_ERR_OVERFLOW = 16,
    FERMAT_ERR_INTERNAL = 99
} fermat_status;

typedef enum fermat_expr_kind { FERMAT_EXPR_POLY = 0, FERMAT_EXPR_RATFUN = 1, FERMAT_EXPR_EXPPOLY = 2 } fermat_expr_kind;

FERMAT_API const char* fermat_version(void);
FERMAT_API const char* fermat_status_name(int status);

/* Diagnostics of the last failed call on this thread. The offset is -1
 * unless the failure was a parse error. */
FERMAT_API const char* fermat_last_error_message(void);
FERMAT_API long fermat_last_error_offset(void);

FERMAT_API void fermat_string_free(char* s);

/* Expressions */
FERMAT_API int fermat_expr_parse(const char* text, fermat_expr** out);
FERMAT_API void fermat_expr_free(fermat_expr* e);
FERMAT_API int fermat_expr_kind_of(const fermat_expr* e, int* kind);
FERMAT_API int fermat_expr_print(const fermat_expr* e, char** out);
/* Degree of a polynomial or rational function as text ("-inf" for zero). */
FERMAT_API int fermat_expr_degree(const fermat_expr* e, char** out);

/* Equations f^m + (R f^(k))^n = Q e^alpha */
FERMAT_API int fermat_equation_create(unsigned m, unsigned n, unsigned k, const char* R, const char* Q,
                                      const char* alpha, fermat_equation** out);
FERMAT_API void fermat_equation_free(fermat_equation* eq);

/* Verification */
FERMAT_API int fermat_verify_exact(const fermat_equation* eq, const char* f, fermat_report** out);
FERMAT_API int fermat_verify_numeric(const fermat_equation* eq, const char* f, double tol, unsigned points,
                                     uint64_t seed, fermat_report** out);
FERMAT_API int fermat_report_verified(const fermat_report* r);
FERMAT_API int fermat_report_is_exact(const fermat_report* r);
FERMAT_API double fermat_report_max_residual(const fermat_report* r);
FERMAT_API int fermat_report_residual_text(const fermat_report* r, char** out);
FERMAT_API int fermat_report_json(const fermat_report* r, char** out);
FERMAT_API void fermat_report_free(fermat_report* r);

/* Analysis */
FERMAT_API int fermat_classify(const fermat_equation* eq, char** json_out);
FERMAT_API int fermat_exponent_gate(unsigned m, unsigned n);
FERMAT_API int fermat_degree_condition(const fermat_equation* eq, const char* R1, char** lhs, char** rhs,
                                       int* equal);
FERMAT_API int fermat_canonical_decompose(const fermat_equation* eq, const char* f, char** u, char** v,
                                          int* product_matches);

/* Family construction: parameters are name/expression pairs such as
 * ("A", "1"), ("a", "3"), ("R", "-i/(2*z)"). The result is a JSON array. */
FERMAT_API int fermat_construct(const char* family, const char* const* keys, const char* const* values, size_t count,
                                char** json_out);

/* k-th roots of the Gaussian rational w, written to out as k (re, im) pairs
 * ordered by principal argument; out must hold 2k doubles. */
FERMAT_API int fermat_kth_roots(const char* w, unsigned k, double* out);

#ifdef __cplusplus
}
#endif

#endif
