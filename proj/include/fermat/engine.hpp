#pragma once

// The equation f^m + (R f^(k))^n = Q e^alpha, candidate verification (exact
// identity testing and seeded numeric sampling), the degree balance for
// f = R1 e^{alpha/m}, and the m = n = 2 decomposition R f^(k) +/- i f.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermat/exppoly.hpp"
#include "fermat/numeric.hpp"

namespace fermat {

struct FermatEquation {
    unsigned m = 1;
    unsigned n = 1;
    unsigned k = 1;
    RatFun R{1};
    RatFun Q{1};
    Poly alpha;

    /// Throws PreconditionViolated unless m, n, k >= 1 and R, Q are nonzero.
    void validate() const;
};

/// Same equation with a numerically known exponent alpha (family exponents
/// built from roots of constraint polynomials).
struct NumericEquation {
    unsigned m = 1;
    unsigned n = 1;
    unsigned k = 1;
    RatFun R{1};
    RatFun Q{1};
    CPoly alpha;

    static NumericEquation from(const FermatEquation& eq);
};

/// One summand scale * coeff(z) * exp(exponent(z)) of a numeric candidate.
struct CandidateTerm {
    Complex scale{1.0, 0.0};
    RatFun coeff{1};
    CPoly exponent;
};

struct Constraint {
    std::string name;  // binding the constraint applies to
    Poly poly;         // in the variable X
    std::string to_string() const;
};

struct NumericCandidate {
    std::string shape;  // template text with named constants
    std::vector<CandidateTerm> terms;
    std::map<std::string, Complex> bindings;
    std::vector<Constraint> constraints;

    static NumericCandidate from_exact(const ExpPoly& f);

    /// Throws ConstraintViolation unless every constraint names a binding and
    /// |p(x)| <= tol * max(1, sum |p_j| |x|^j).
    void check_constraints(double tol = 1e-10) const;
};

struct VerificationReport {
    enum class Mode { Exact, Numeric };
    Mode mode = Mode::Exact;
    bool verified = false;
    ExpPoly residual;           // exact mode
    double max_residual = 0.0;  // numeric mode
    std::vector<Complex> samples;

    std::string verdict_text() const { return verified ? "verified" : "refuted"; }
    std::string mode_text() const { return mode == Mode::Exact ? "exact" : "numeric"; }
    std::string to_json() const;
};

struct NumericOptions {
    double tol = 1e-9;
    unsigned points = 20;
    std::uint64_t seed = 42;
};

ExpPoly lhs_expand(const FermatEquation& eq, const ExpPoly& f);
/// Q e^alpha in exponential-polynomial normal form.
ExpPoly rhs_expand(const FermatEquation& eq);

/// Throws PreconditionViolated when f = 0.
VerificationReport verify_exact(const FermatEquation& eq, const ExpPoly& f);

/// Samples z in 0.5 <= |z| <= 2, skipping poles and overflowing exponents.
/// Throws ConstraintViolation or AllPointsRejected.
VerificationReport verify_numeric(const NumericEquation& eq, const NumericCandidate& cand,
                                  const NumericOptions& opts = {});
VerificationReport verify_numeric(const FermatEquation& eq, const NumericCandidate& cand,
                                  const NumericOptions& opts = {});

/// Value and first `order` derivatives of the candidate at z.
std::vector<Complex> candidate_derivatives(const NumericCandidate& cand, Complex z, unsigned order);

struct DegreeCondition {
    Degree lhs = Degree::neg_infinity();
    Degree rhs = Degree::neg_infinity();
    bool equal() const { return lhs == rhs; }
};

/// m k deg(alpha') against deg(Q - R1^m) - m deg(R R1). Requires m = n,
/// alpha nonconstant and R1 nonzero; throws DegenerateDifference when
/// Q - R1^m vanishes.
DegreeCondition degree_condition(const FermatEquation& eq, const RatFun& R1);

struct Decomposition {
    ExpPoly u;  // R f^(k) + i f
    ExpPoly v;  // R f^(k) - i f
    bool product_matches = false;
};

/// Requires m = n = 2 and f nonzero; throws NotMonomialPair when u or v is not a
/// single exponential term.
Decomposition canonical_decompose(const FermatEquation& eq, const ExpPoly& f);

}  // namespace fermat
