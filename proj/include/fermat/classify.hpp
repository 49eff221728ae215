#pragma once

// Classification of f^m + (R f^(k))^n = Q e^alpha: nonexistence verdicts for
// m != n, candidate families for m = n, and constructors that build and
// verify explicit family members.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermat/engine.hpp"

namespace fermat {

struct FreeParameter {
    std::string name;
    std::string domain;
};

struct FamilyDescriptor {
    std::string tag;      // T23_A1 ... T24_E
    std::string theorem;  // "2.3" or "2.4"
    std::vector<FreeParameter> free_parameters;
    std::vector<std::string> constraints;
    std::vector<std::string> side_conditions;
    std::string template_text;
};

/// Descriptor with the generic constraints of a family; tags outside the
/// known list throw PreconditionViolated.
FamilyDescriptor family_descriptor(const std::string& tag);
const std::vector<std::string>& family_tags();

struct Verdict {
    enum class Kind { NoTranscendentalSolution, NoRationalSolution, Families, Unclassified };
    Kind kind = Kind::Unclassified;
    std::string theorem;
    std::string reason;
    std::vector<std::string> hypotheses;
    std::vector<FamilyDescriptor> families;
    std::vector<std::string> notes;
    std::string open_question;

    std::string kind_text() const;
    std::string to_json() const;
};

/// 1/m + 1/n >= 1.
bool exponent_gate(unsigned m, unsigned n);

/// Requires m != n and m + n > 2, otherwise PreconditionViolated.
Verdict nonexistence(unsigned m, unsigned n, unsigned k, bool alpha_constant);

/// NoRationalSolution when alpha is nonconstant.
std::optional<Verdict> preliminary(const FermatEquation& eq);

Verdict classify(const FermatEquation& eq);

/// The k roots of x^k = w ordered by principal argument. Throws ZeroBase.
std::vector<Complex> kth_roots(Complex w, unsigned k);
/// Same roots, exact where a root is a Gaussian rational.
std::vector<Constant> kth_roots(const GaussianRational& w, unsigned k);

/// Named inputs of the family constructors. Unset optionals take the
/// defaults of each family (b, a2, b2, c = 0; Q1 = Q, Q2 = 1).
struct FamilyParams {
    std::optional<unsigned> m, k;
    std::optional<GaussianRational> A, a, b, d, c, a1, a2, b1, b2, t;
    std::optional<RatFun> R, Q, R1, Q1, Q2;
    std::optional<Poly> P, alpha;
    std::optional<unsigned> root1, root2;

    /// Parses name -> expression text; throws PreconditionViolated on an
    /// unknown name and ParseError on malformed values.
    static FamilyParams from_text(const std::map<std::string, std::string>& values);
};

struct Construction {
    std::string tag;
    std::string theorem;
    NumericEquation equation;
    std::optional<FermatEquation> exact_equation;
    NumericCandidate candidate;
    std::optional<ExpPoly> exact;  // set when every constant is a Gaussian rational
    VerificationReport report;
    std::vector<std::string> side_conditions;
    std::vector<std::string> notes;

    std::string to_json() const;
};

/// Every constructor checks its side conditions (SideConditionFailed), builds
/// the candidates, verifies them and throws VerificationFailed on refutation.
std::vector<Construction> construct_t23_B(unsigned m, unsigned k, const GaussianRational& A,
                                          const GaussianRational& a, const GaussianRational& b = 0);
std::vector<Construction> construct_t23_A1(unsigned k, const GaussianRational& A, const GaussianRational& a,
                                           const GaussianRational& b = 0);
std::vector<Construction> construct_t23_A2(unsigned k, const GaussianRational& A, const GaussianRational& a2 = 0,
                                           const GaussianRational& b2 = 0);
std::vector<Construction> construct_t24(const std::string& tag, const FamilyParams& params);

/// Dispatch on any family tag.
std::vector<Construction> construct(const std::string& tag, const FamilyParams& params);
std::string constructions_to_json(const std::vector<Construction>& cs);

}  // namespace fermat
