#include "fermat/fermat.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <string>

#include "fermat/classify.hpp"
#include "fermat/engine.hpp"
#include "fermat/error.hpp"
#include "fermat/parser.hpp"

struct fermat_expr {
    fermat::ParsedExpr value;
};

struct fermat_equation {
    fermat::FermatEquation value;
};

struct fermat_report {
    fermat::VerificationReport value;
};

namespace {

thread_local std::string g_message;
thread_local long g_offset = -1;

int fail(int status, const std::string& message, long offset = -1) {
    g_message = message;
    g_offset = offset;
    return status;
}

int family_status(fermat::FamilyError::Kind k) {
    using K = fermat::FamilyError::Kind;
    switch (k) {
        case K::NoSolutionInFamily: return FERMAT_ERR_NO_SOLUTION_IN_FAMILY;
        case K::FamilyDegenerate: return FERMAT_ERR_FAMILY_DEGENERATE;
        case K::EmptyFamily: return FERMAT_ERR_EMPTY_FAMILY;
        case K::SideConditionFailed: return FERMAT_ERR_SIDE_CONDITION_FAILED;
        case K::VerificationFailed: return FERMAT_ERR_VERIFICATION_FAILED;
    }
    return FERMAT_ERR_INTERNAL;
}

// Runs body, mapping library exceptions to status codes.
template <class F>
int guard(F&& body) {
    g_message.clear();
    g_offset = -1;
    try {
        body();
        return FERMAT_OK;
    } catch (const fermat::ParseError& e) {
        return fail(FERMAT_ERR_PARSE, e.detail(), static_cast<long>(e.offset()));
    } catch (const fermat::FamilyError& e) {
        return fail(family_status(e.kind()), e.what());
    } catch (const fermat::DivisionByZero& e) {
        return fail(FERMAT_ERR_DIVISION_BY_ZERO, e.what());
    } catch (const fermat::PreconditionViolated& e) {
        return fail(FERMAT_ERR_PRECONDITION, e.what());
    } catch (const fermat::DegenerateDifference& e) {
        return fail(FERMAT_ERR_DEGENERATE_DIFFERENCE, e.what());
    } catch (const fermat::ConstraintViolation& e) {
        return fail(FERMAT_ERR_CONSTRAINT_VIOLATION, e.what());
    } catch (const fermat::AllPointsRejected& e) {
        return fail(FERMAT_ERR_ALL_POINTS_REJECTED, e.what());
    } catch (const fermat::NotMonomialPair& e) {
        return fail(FERMAT_ERR_NOT_MONOMIAL_PAIR, e.what());
    } catch (const fermat::ZeroBase& e) {
        return fail(FERMAT_ERR_ZERO_BASE, e.what());
    } catch (const fermat::PoleAtSamplePoint& e) {
        return fail(FERMAT_ERR_POLE, e.what());
    } catch (const fermat::OverflowAtSamplePoint& e) {
        return fail(FERMAT_ERR_OVERFLOW, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FERMAT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FERMAT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FERMAT_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p) {
    if (!p) throw fermat::PreconditionViolated("null argument");
}

}  // namespace

extern "C" {

const char* fermat_version(void) { return "1.0.0"; }

const char* fermat_status_name(int status) {
    switch (status) {
        case FERMAT_OK: return "ok";
        case FERMAT_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case FERMAT_ERR_PARSE: return "parse_error";
        case FERMAT_ERR_DIVISION_BY_ZERO: return "division_by_zero";
        case FERMAT_ERR_PRECONDITION: return "precondition_violated";
        case FERMAT_ERR_DEGENERATE_DIFFERENCE: return "degenerate_difference";
        case FERMAT_ERR_CONSTRAINT_VIOLATION: return "constraint_violation";
        case FERMAT_ERR_ALL_POINTS_REJECTED: return "all_points_rejected";
        case FERMAT_ERR_NOT_MONOMIAL_PAIR: return "not_monomial_pair";
        case FERMAT_ERR_ZERO_BASE: return "zero_base";
        case FERMAT_ERR_NO_SOLUTION_IN_FAMILY: return "no_solution_in_family";
        case FERMAT_ERR_FAMILY_DEGENERATE: return "family_degenerate";
        case FERMAT_ERR_EMPTY_FAMILY: return "empty_family";
        case FERMAT_ERR_SIDE_CONDITION_FAILED: return "side_condition_failed";
        case FERMAT_ERR_VERIFICATION_FAILED: return "verification_failed";
        case FERMAT_ERR_POLE: return "pole_at_sample_point";
        case FERMAT_ERR_OVERFLOW: return "overflow_at_sample_point";
        case FERMAT_ERR_INTERNAL: return "internal_error";
        default: return "unknown";
    }
}

const char* fermat_last_error_message(void) { return g_message.c_str(); }
long fermat_last_error_offset(void) { return g_offset; }

void fermat_string_free(char* s) { std::free(s); }

int fermat_expr_parse(const char* text, fermat_expr** out) {
    if (!text || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guard([&] { *out = new fermat_expr{fermat::parse(text)}; });
}

void fermat_expr_free(fermat_expr* e) { delete e; }

int fermat_expr_kind_of(const fermat_expr* e, int* kind) {
    if (!e || !kind) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    *kind = static_cast<int>(e->value.index());
    return FERMAT_OK;
}

int fermat_expr_print(const fermat_expr* e, char** out) {
    if (!e || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = dup(fermat::print_canonical(e->value)); });
}

int fermat_expr_degree(const fermat_expr* e, char** out) {
    if (!e || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    if (auto* p = std::get_if<fermat::Poly>(&e->value)) {
        return guard([&] { *out = dup(p->degree().to_string()); });
    }
    if (auto* r = std::get_if<fermat::RatFun>(&e->value)) {
        return guard([&] { *out = dup(r->degree().to_string()); });
    }
    return fail(FERMAT_ERR_INVALID_ARGUMENT, "degree is defined for polynomials and rational functions only");
}

int fermat_equation_create(unsigned m, unsigned n, unsigned k, const char* R, const char* Q, const char* alpha,
                           fermat_equation** out) {
    if (!R || !Q || !alpha || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guard([&] {
        fermat::FermatEquation eq;
        eq.m = m;
        eq.n = n;
        eq.k = k;
        eq.R = fermat::parse_ratfun(R);
        eq.Q = fermat::parse_ratfun(Q);
        eq.alpha = fermat::parse_poly(alpha);
        eq.validate();
        *out = new fermat_equation{eq};
    });
}

void fermat_equation_free(fermat_equation* eq) { delete eq; }

int fermat_verify_exact(const fermat_equation* eq, const char* f, fermat_report** out) {
    if (!eq || !f || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guard([&] {
        auto report = fermat::verify_exact(eq->value, fermat::parse_exppoly(f));
        *out = new fermat_report{std::move(report)};
    });
}

int fermat_verify_numeric(const fermat_equation* eq, const char* f, double tol, unsigned points, uint64_t seed,
                          fermat_report** out) {
    if (!eq || !f || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guard([&] {
        if (!(tol > 0.0) || points == 0) throw fermat::PreconditionViolated("tolerance and point count must be positive");
        fermat::ExpPoly fe = fermat::parse_exppoly(f);
        if (fe.is_zero()) throw fermat::PreconditionViolated("candidate must be nonzero");
        auto cand = fermat::NumericCandidate::from_exact(fe);
        auto report = fermat::verify_numeric(eq->value, cand, fermat::NumericOptions{tol, points, seed});
        *out = new fermat_report{std::move(report)};
    });
}

int fermat_report_verified(const fermat_report* r) { return r && r->value.verified ? 1 : 0; }

int fermat_report_is_exact(const fermat_report* r) {
    return r && r->value.mode == fermat::VerificationReport::Mode::Exact ? 1 : 0;
}

double fermat_report_max_residual(const fermat_report* r) { return r ? r->value.max_residual : 0.0; }

int fermat_report_residual_text(const fermat_report* r, char** out) {
    if (!r || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = dup(fermat::print_canonical(r->value.residual)); });
}

int fermat_report_json(const fermat_report* r, char** out) {
    if (!r || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = dup(r->value.to_json()); });
}

void fermat_report_free(fermat_report* r) { delete r; }

int fermat_classify(const fermat_equation* eq, char** json_out) {
    if (!eq || !json_out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *json_out = dup(fermat::classify(eq->value).to_json()); });
}

int fermat_exponent_gate(unsigned m, unsigned n) {
    if (m == 0 || n == 0) return 0;
    return fermat::exponent_gate(m, n) ? 1 : 0;
}

int fermat_degree_condition(const fermat_equation* eq, const char* R1, char** lhs, char** rhs, int* equal) {
    if (!eq || !R1 || !lhs || !rhs || !equal) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto dc = fermat::degree_condition(eq->value, fermat::parse_ratfun(R1));
        char* l = dup(dc.lhs.to_string());
        char* r;
        try {
            r = dup(dc.rhs.to_string());
        } catch (...) {
            std::free(l);
            throw;
        }
        *lhs = l;
        *rhs = r;
        *equal = dc.equal() ? 1 : 0;
    });
}

int fermat_canonical_decompose(const fermat_equation* eq, const char* f, char** u, char** v, int* product_matches) {
    if (!eq || !f || !u || !v || !product_matches) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto d = fermat::canonical_decompose(eq->value, fermat::parse_exppoly(f));
        std::string us = fermat::print_canonical(d.u);
        std::string vs = fermat::print_canonical(d.v);
        char* up = dup(us);
        char* vp;
        try {
            vp = dup(vs);
        } catch (...) {
            std::free(up);
            throw;
        }
        *u = up;
        *v = vp;
        *product_matches = d.product_matches ? 1 : 0;
    });
}

int fermat_construct(const char* family, const char* const* keys, const char* const* values, size_t count,
                     char** json_out) {
    if (!family || !json_out || (count > 0 && (!keys || !values)))
        return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::map<std::string, std::string> text;
        for (size_t i = 0; i < count; ++i) {
            need(keys[i]);
            need(values[i]);
            text[keys[i]] = values[i];
        }
        auto params = fermat::FamilyParams::from_text(text);
        *json_out = dup(fermat::constructions_to_json(fermat::construct(family, params)));
    });
}

int fermat_kth_roots(const char* w, unsigned k, double* out) {
    if (!w || !out) return fail(FERMAT_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto roots = fermat::kth_roots(fermat::parse_constant(w), k);
        for (size_t j = 0; j < roots.size(); ++j) {
            fermat::Complex x = roots[j].value();
            out[2 * j] = x.real();
            out[2 * j + 1] = x.imag();
        }
    });
}

}  // extern "C"
