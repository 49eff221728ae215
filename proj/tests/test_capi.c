/* Exercises the C interface from plain C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "fermat/fermat.h"

static int failures = 0;

#define CHECK(cond)                                                         \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static void test_expressions(void) {
    fermat_expr* e = NULL;
    char* s = NULL;
    int kind = -1;
    CHECK(fermat_expr_parse("(z^2+1)/(z+1)", &e) == FERMAT_OK);
    CHECK(fermat_expr_kind_of(e, &kind) == FERMAT_OK && kind == FERMAT_EXPR_RATFUN);
    CHECK(fermat_expr_print(e, &s) == FERMAT_OK && strcmp(s, "(z^2 + 1)/(z + 1)") == 0);
    fermat_string_free(s);
    CHECK(fermat_expr_degree(e, &s) == FERMAT_OK && strcmp(s, "1") == 0);
    fermat_string_free(s);
    fermat_expr_free(e);

    CHECK(fermat_expr_parse("0", &e) == FERMAT_OK);
    CHECK(fermat_expr_degree(e, &s) == FERMAT_OK && strcmp(s, "-inf") == 0);
    fermat_string_free(s);
    fermat_expr_free(e);

    CHECK(fermat_expr_parse("exp(z)", &e) == FERMAT_OK);
    CHECK(fermat_expr_kind_of(e, &kind) == FERMAT_OK && kind == FERMAT_EXPR_EXPPOLY);
    CHECK(fermat_expr_degree(e, &s) == FERMAT_ERR_INVALID_ARGUMENT);
    fermat_expr_free(e);

    e = NULL;
    CHECK(fermat_expr_parse("exp(exp(z))", &e) == FERMAT_ERR_PARSE);
    CHECK(e == NULL);
    CHECK(fermat_last_error_offset() == 4);
    CHECK(strlen(fermat_last_error_message()) > 0);
    CHECK(fermat_expr_parse(NULL, &e) == FERMAT_ERR_INVALID_ARGUMENT);
    CHECK(fermat_last_error_offset() == -1);
}

static void test_verify(void) {
    fermat_equation* eq = NULL;
    fermat_report* rep = NULL;
    char* s = NULL;
    CHECK(fermat_equation_create(2, 2, 1, "(z^2+1)/(z+1)", "((z-1)/(z+1))^2 + ((z^2+1)*(z^2+3)/(2*(z+1)^3))^2",
                                 "z", &eq) == FERMAT_OK);
    CHECK(fermat_verify_exact(eq, "((z-1)/(z+1))*exp(z/2)", &rep) == FERMAT_OK);
    CHECK(fermat_report_verified(rep) == 1);
    CHECK(fermat_report_is_exact(rep) == 1);
    CHECK(fermat_report_json(rep, &s) == FERMAT_OK && strstr(s, "\"verdict\":\"verified\"") != NULL);
    fermat_string_free(s);
    fermat_report_free(rep);

    CHECK(fermat_verify_numeric(eq, "((z-1)/(z+1))*exp(z/2)", 1e-9, 20, 42, &rep) == FERMAT_OK);
    CHECK(fermat_report_verified(rep) == 1);
    CHECK(fermat_report_max_residual(rep) < 1e-9);
    fermat_report_free(rep);

    CHECK(fermat_verify_exact(eq, "exp(z)", &rep) == FERMAT_OK);
    CHECK(fermat_report_verified(rep) == 0);
    CHECK(fermat_report_residual_text(rep, &s) == FERMAT_OK && strcmp(s, "0") != 0);
    fermat_string_free(s);
    fermat_report_free(rep);

    CHECK(fermat_verify_exact(eq, "0", &rep) == FERMAT_ERR_PRECONDITION);
    {
        char *lhs = NULL, *rhs = NULL;
        int equal = 0;
        CHECK(fermat_degree_condition(eq, "(z-1)/(z+1)", &lhs, &rhs, &equal) == FERMAT_OK);
        CHECK(strcmp(lhs, "0") == 0 && strcmp(rhs, "0") == 0 && equal == 1);
        fermat_string_free(lhs);
        fermat_string_free(rhs);
    }
    CHECK(fermat_classify(eq, &s) == FERMAT_OK && strstr(s, "T24_A") != NULL);
    fermat_string_free(s);
    fermat_equation_free(eq);

    CHECK(fermat_equation_create(0, 2, 1, "1", "1", "0", &eq) == FERMAT_ERR_PRECONDITION);
    CHECK(fermat_equation_create(2, 2, 1, "1", "1", "1/z", &eq) == FERMAT_ERR_PARSE);
    CHECK(fermat_equation_create(2, 2, 1, "1 +", "1", "0", &eq) == FERMAT_ERR_PARSE);
    CHECK(fermat_last_error_offset() == 3);
}

static void test_decompose_and_roots(void) {
    fermat_equation* eq = NULL;
    char *u = NULL, *v = NULL;
    int match = 0;
    double roots[8];
    CHECK(fermat_equation_create(2, 2, 1, "1", "1", "0", &eq) == FERMAT_OK);
    CHECK(fermat_canonical_decompose(eq, "(exp(i*z)-exp(-i*z))/(2*i)", &u, &v, &match) == FERMAT_OK);
    CHECK(strcmp(u, "exp(i*z)") == 0 && strcmp(v, "exp(-i*z)") == 0 && match == 1);
    fermat_string_free(u);
    fermat_string_free(v);
    CHECK(fermat_canonical_decompose(eq, "exp(z)+exp(2*z)+exp(3*z)", &u, &v, &match) == FERMAT_ERR_NOT_MONOMIAL_PAIR);
    fermat_equation_free(eq);

    CHECK(fermat_kth_roots("-1", 4, roots) == FERMAT_OK);
    for (int j = 0; j < 4; ++j) CHECK(fabs(hypot(roots[2 * j], roots[2 * j + 1]) - 1.0) < 1e-14);
    CHECK(roots[0] < 0 && roots[1] < 0);
    CHECK(fermat_kth_roots("0", 2, roots) == FERMAT_ERR_ZERO_BASE);
    CHECK(fermat_exponent_gate(2, 2) == 1 && fermat_exponent_gate(2, 3) == 0);
}

static void test_construct(void) {
    const char* keys[] = {"R", "P"};
    const char* values[] = {"-i/(2*z)", "z^2"};
    char* s = NULL;
    CHECK(fermat_construct("T24_E", keys, values, 2, &s) == FERMAT_OK);
    CHECK(s != NULL && strstr(s, "\"tag\":\"T24_E\"") != NULL);
    fermat_string_free(s);

    const char* bkeys[] = {"m", "A", "a"};
    const char* bvals[] = {"3", "-1", "3"};
    CHECK(fermat_construct("T23_B", bkeys, bvals, 3, &s) == FERMAT_ERR_NO_SOLUTION_IN_FAMILY);
    CHECK(fermat_construct("T24_E", keys, values, 0, &s) == FERMAT_ERR_PRECONDITION);
    const char* bad[] = {"zzz"};
    CHECK(fermat_construct("T24_E", bad, values, 1, &s) == FERMAT_ERR_PRECONDITION);
    CHECK(strcmp(fermat_status_name(FERMAT_ERR_EMPTY_FAMILY), "empty_family") == 0);
    CHECK(strlen(fermat_version()) > 0);
}

int main(void) {
    test_expressions();
    test_verify();
    test_decompose_and_roots();
    test_construct();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("all C interface checks passed\n");
    return 0;
}
