#include <cmath>

#include "fermat/classify.hpp"
#include "fermat/error.hpp"
#include "fermat/parser.hpp"

namespace fermat {

namespace {

using Kind = FamilyError::Kind;

const GaussianRational kI = GaussianRational::i();

[[noreturn]] void side_failed(const std::string& condition) {
    throw FamilyError(Kind::SideConditionFailed, "side condition failed: " + condition);
}

void require(bool ok, const std::string& condition) {
    if (!ok) side_failed(condition);
}

struct Summand {
    Constant scale;
    RatFun coeff;
    std::vector<Constant> exponent;  // coefficients from degree 0 upward
};

std::vector<Constant> constants_of(const Poly& p) {
    std::vector<Constant> out;
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

std::vector<Constant> scaled(const std::vector<Constant>& p, const Constant& s) {
    std::vector<Constant> out;
    for (const auto& c : p) out.push_back(c * s);
    return out;
}

std::vector<Constant> with_constant(std::vector<Constant> p, const Constant& c) {
    if (p.empty()) p.emplace_back(0);
    p[0] = p[0] + c;
    return p;
}

bool numerically_zero(const Constant& c, double scale = 1.0) {
    if (c.is_exact()) return c.exact()->is_zero();
    return std::abs(c.value()) < 1e-12 * std::max(1.0, scale);
}

bool same_poly(const std::vector<Constant>& a, const std::vector<Constant>& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
        Constant x = j < a.size() ? a[j] : Constant(0);
        Constant y = j < b.size() ? b[j] : Constant(0);
        if (x.is_exact() && y.is_exact()) {
            if (!(*x.exact() == *y.exact())) return false;
        } else if (std::abs(x.value() - y.value()) > 1e-10 * std::max(1.0, std::abs(y.value()))) {
            return false;
        }
    }
    return true;
}

bool is_constant_poly(const std::vector<Constant>& p) {
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (!numerically_zero(p[j], std::abs(p[0].value()))) return false;
    }
    return true;
}

/// Drops coefficients that are numerically zero above degree 0 so that an
/// exponent like (u + v) z with u + v ~ 1e-17 becomes exactly constant.
std::vector<Constant> snap(std::vector<Constant> p) {
    double scale = 0.0;
    for (const auto& c : p) scale = std::max(scale, std::abs(c.value()));
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (!p[j].is_exact() && std::abs(p[j].value()) < 1e-12 * std::max(1.0, scale)) p[j] = Constant(0);
    }
    return p;
}

std::string constraint_text(const std::string& name, const std::string& rhs, unsigned k) {
    return name + (k == 1 ? "" : "^" + std::to_string(k)) + " = " + rhs;
}

/// Assembles candidate and equation, verifies, and throws VerificationFailed
/// on refutation.
Construction finish(std::string tag, std::string shape, const std::vector<Summand>& summands, unsigned m,
                    unsigned k, const RatFun& R, const RatFun& Q, const std::vector<Constant>& alpha,
                    std::map<std::string, Complex> bindings, std::vector<Constraint> constraints,
                    std::vector<std::string> side_conditions, std::vector<std::string> notes) {
    Construction c;
    c.tag = std::move(tag);
    c.theorem = family_descriptor(c.tag).theorem;
    c.equation = {m, m, k, R, Q, numeric_poly(alpha)};
    if (auto exact_alpha = exact_poly(alpha)) c.exact_equation = FermatEquation{m, m, k, R, Q, *exact_alpha};

    bool all_exact = true;
    ExpPoly exact;
    for (const auto& s : summands) {
        auto e = exact_poly(s.exponent);
        if (!s.scale.is_exact() || !e) {
            all_exact = false;
            break;
        }
        exact += ExpPoly::from_term(s.coeff * RatFun(*s.scale.exact()), *e);
    }
    if (all_exact && c.exact_equation) {
        c.exact = exact;
        c.candidate = NumericCandidate::from_exact(exact);
    } else {
        c.candidate.shape = std::move(shape);
        for (const auto& s : summands) c.candidate.terms.push_back({s.scale.value(), s.coeff, numeric_poly(s.exponent)});
    }
    c.candidate.bindings = std::move(bindings);
    c.candidate.constraints = std::move(constraints);
    c.side_conditions = std::move(side_conditions);
    c.notes = std::move(notes);

    if (c.exact) {
        if (c.exact->is_zero()) throw FamilyError(Kind::FamilyDegenerate, c.tag + ": candidate vanishes identically");
        c.report = verify_exact(*c.exact_equation, *c.exact);
        c.candidate.check_constraints();
    } else {
        c.report = verify_numeric(c.equation, c.candidate);
    }
    if (!c.report.verified) {
        std::string detail = c.report.mode == VerificationReport::Mode::Exact
                                 ? "residual " + print_canonical(c.report.residual)
                                 : "max residual " + std::to_string(c.report.max_residual);
        throw FamilyError(Kind::VerificationFailed, c.tag + ": constructed candidate refuted, " + detail);
    }
    return c;
}

std::string gr(const GaussianRational& g) { return g.to_string(); }

struct Factorization {
    RatFun Q1;
    RatFun Q2;
    RatFun Q;
};

/// Q1 = Q, Q2 = 1 by default; a missing Q is the product of its factors.
Factorization factor_q(const FamilyParams& p) {
    Factorization f;
    if (p.Q1) {
        f.Q1 = *p.Q1;
    } else if (p.Q) {
        f.Q1 = p.Q2 ? *p.Q / *p.Q2 : *p.Q;
    } else {
        f.Q1 = 1;
    }
    if (p.Q2) {
        f.Q2 = *p.Q2;
    } else if (p.Q) {
        require(!f.Q1.is_zero(), "Q1 nonzero");
        f.Q2 = *p.Q / f.Q1;
    } else {
        f.Q2 = 1;
    }
    f.Q = p.Q ? *p.Q : f.Q1 * f.Q2;
    require(!f.Q.is_zero(), "Q nonzero");
    require(f.Q1 * f.Q2 == f.Q, "Q1*Q2 = Q");
    return f;
}

unsigned k_of(const FamilyParams& p) {
    unsigned k = p.k.value_or(1);
    if (k == 0) throw PreconditionViolated("k must be positive");
    return k;
}

void require_m2(const FamilyParams& p) {
    if (p.m && *p.m != 2) side_failed("m = 2");
}

template <typename T>
const T& need(const std::optional<T>& v, const char* name) {
    if (!v) throw PreconditionViolated(std::string("parameter ") + name + " is required");
    return *v;
}

/// Roots of x^k = w, or the one selected by index.
std::vector<Constant> choose_roots(const GaussianRational& w, unsigned k, std::optional<unsigned> index) {
    std::vector<Constant> roots = kth_roots(w, k);
    if (!index) return roots;
    if (*index >= roots.size()) throw PreconditionViolated("root index out of range");
    return {roots[*index]};
}

Complex binding(const Constant& c) { return c.value(); }

bool constant_equals(const Constant& x, const GaussianRational& target) {
    if (x.is_exact()) return *x.exact() == target;
    Complex t = target.to_complex();
    return std::abs(x.value() - t) <= 1e-10 * std::max(1.0, std::abs(t));
}

GaussianRational constant_of(const RatFun& r, const char* what) {
    if (!r.is_constant()) side_failed(std::string(what) + " constant");
    return r.num().constant_term();
}

Construction t24_A(const FamilyParams& p) {
    unsigned m = p.m.value_or(2);
    if (m < 2) side_failed("m >= 2");
    unsigned k = k_of(p);
    FermatEquation eq{m, m, k, p.R.value_or(RatFun(1)), p.Q.value_or(RatFun(1)), need(p.alpha, "alpha")};
    const RatFun& R1 = need(p.R1, "R1");
    require(!R1.is_zero(), "R1 nonzero");
    require(!eq.alpha.is_constant(), "alpha nonconstant");
    DegreeCondition dc;
    try {
        dc = degree_condition(eq, R1);
    } catch (const DegenerateDifference&) {
        side_failed("Q - R1^m not identically zero");
    }
    std::string cond = "m*k*deg(alpha') = " + dc.lhs.to_string() + ", deg(Q - R1^m) - m*deg(R*R1) = " + dc.rhs.to_string();
    require(dc.equal(), cond);
    Poly exponent = eq.alpha * GaussianRational(Rational(1, m));
    return finish("T24_A", "R1*exp(alpha/m)", {{Constant(1), R1, constants_of(exponent)}}, m, k, eq.R, eq.Q,
                  constants_of(eq.alpha), {}, {}, {"m = " + std::to_string(m) + " >= 2", "alpha nonconstant", cond},
                  {});
}

Construction t24_B(const FamilyParams& p) {
    require_m2(p);
    unsigned k = k_of(p);
    Factorization f = factor_q(p);
    const GaussianRational& d = need(p.d, "d");
    require(!d.is_zero(), "d nonzero");
    const Poly& alpha = need(p.alpha, "alpha");
    require(!alpha.is_constant(), "alpha nonconstant");
    RatFun shape = RatFun(d * d) * f.Q1 - f.Q2;
    require(!shape.is_zero(), "d^2*Q1 - Q2 != 0");
    RatFun coeff = shape / RatFun(GaussianRational(2) * kI * d);
    Poly exponent = alpha * GaussianRational(Rational(1, 2));
    return finish("T24_B", "(d^2*Q1 - Q2)/(2*i*d)*exp(alpha/2)", {{Constant(1), coeff, constants_of(exponent)}}, 2,
                  k, p.R.value_or(RatFun(1)), f.Q, constants_of(alpha), {}, {},
                  {"Q1*Q2 = Q", "d^2*Q1 - Q2 = " + shape.to_string() + " != 0", "alpha nonconstant"}, {});
}

std::vector<Construction> t24_C(const FamilyParams& p) {
    require_m2(p);
    unsigned k = k_of(p);
    GaussianRational A = p.A ? *p.A : constant_of(p.R.value_or(RatFun(1)), "R = A");
    require(!A.is_zero(), "A nonzero");
    Factorization f = factor_q(p);
    constant_of(f.Q, "Q");
    constant_of(f.Q1, "Q1");
    constant_of(f.Q2, "Q2");
    GaussianRational w1 = kI / A;
    GaussianRational w2 = -kI / A;
    std::vector<Constant> a1s = p.a1 ? std::vector<Constant>{Constant(*p.a1)} : choose_roots(w1, k, p.root1);
    std::vector<Constant> a2s = p.a2 ? std::vector<Constant>{Constant(*p.a2)} : choose_roots(w2, k, p.root2);
    Constant b1(p.b1.value_or(0));
    Constant b2(p.b2.value_or(0));
    Constant half_over_i(GaussianRational(Rational(1, 2)) / kI);
    std::vector<Construction> out;
    for (const auto& a1 : a1s) {
        require(constant_equals(pow(a1, k) * Constant(A), kI), "A*a1^k = i");
        for (const auto& a2 : a2s) {
            require(constant_equals(pow(a2, k) * Constant(A), -kI), "A*a2^k = -i");
            std::vector<Constant> alpha = snap({b1 + b2, a1 + a2});
            std::vector<std::string> sides = {"R = A = " + gr(A) + " constant", "A*a1^k = i", "A*a2^k = -i",
                                              "Q1*Q2 = Q constant", "alpha = (a1 + a2)*z + b1 + b2"};
            if (p.alpha) require(same_poly(alpha, constants_of(*p.alpha)), "alpha = (a1 + a2)*z + b1 + b2");
            if (is_constant_poly(alpha)) {
                require(k % 2 == 1, "k odd when alpha is constant");
                sides.push_back("k = " + std::to_string(k) + " odd (alpha constant)");
            }
            std::vector<Summand> terms = {{half_over_i, f.Q1, {b1, a1}}, {-half_over_i, f.Q2, {b2, a2}}};
            out.push_back(finish("T24_C", "(Q1*exp(a1*z + b1) - Q2*exp(a2*z + b2))/(2*i)", terms, 2, k, RatFun(A),
                                 f.Q, alpha, {{"a1", binding(a1)}, {"a2", binding(a2)}},
                                 {{"a1", Poly::monomial(1, k) - Poly(w1)}, {"a2", Poly::monomial(1, k) - Poly(w2)}},
                                 sides, {}));
        }
    }
    return out;
}

std::vector<Construction> t24_D(const FamilyParams& p) {
    require_m2(p);
    unsigned k = k_of(p);
    const RatFun& R = need(p.R, "R");
    require(R.degree() == Degree(0), "deg(R) = 0");
    require(!R.is_constant(), "R nonconstant");
    Factorization f = factor_q(p);
    constant_of(f.Q, "Q = B");
    require(!f.Q1.is_constant() && !f.Q2.is_constant(), "Q1, Q2 nonconstant");
    const GaussianRational& a1 = need(p.a1, "a1");
    require(!a1.is_zero(), "a1 nonzero");
    GaussianRational w = -pow(a1, k);
    bool enumerate = !p.a2 && !p.root2;
    std::vector<Constant> a2s = p.a2 ? std::vector<Constant>{Constant(*p.a2)} : choose_roots(w, k, p.root2);
    Constant b1(p.b1.value_or(0));
    Constant b2(p.b2.value_or(0));
    Constant half_over_i(GaussianRational(Rational(1, 2)) / kI);
    std::vector<Construction> out;
    std::vector<std::string> discarded;
    for (std::size_t j = 0; j < a2s.size(); ++j) {
        const Constant& a2 = a2s[j];
        require(!numerically_zero(a2), "a2 nonzero");
        require(constant_equals(pow(a2, k), w), "a1^k + a2^k = 0");
        std::vector<Constant> alpha = snap({b1 + b2, Constant(a1) + a2});
        std::vector<std::string> sides = {"deg(R) = 0", "R nonconstant", "Q = B constant", "Q1, Q2 nonconstant",
                                          "Q1*Q2 = Q", "a1^k + a2^k = 0", "alpha = (a1 + a2)*z + b1 + b2"};
        if (p.alpha) require(same_poly(alpha, constants_of(*p.alpha)), "alpha = (a1 + a2)*z + b1 + b2");
        if (is_constant_poly(alpha)) {
            require(k % 2 == 1, "k odd when alpha is constant");
            sides.push_back("k = " + std::to_string(k) + " odd (alpha constant)");
        }
        std::vector<Summand> terms = {{half_over_i, f.Q1, {b1, Constant(a1)}}, {-half_over_i, f.Q2, {b2, a2}}};
        try {
            out.push_back(finish("T24_D", "(Q1*exp(a1*z + b1) - Q2*exp(a2*z + b2))/(2*i)", terms, 2, k, R, f.Q,
                                 alpha, {{"a2", binding(a2)}}, {{"a2", Poly::monomial(1, k) - Poly(w)}}, sides, {}));
        } catch (const FamilyError& e) {
            if (!enumerate || e.kind() != Kind::VerificationFailed) throw;
            discarded.push_back("root " + std::to_string(j) + " for a2 refuted by the verifier, discarded");
        }
    }
    if (out.empty()) throw FamilyError(Kind::VerificationFailed, "T24_D: every choice of a2 is refuted");
    for (auto& c : out) c.notes.insert(c.notes.end(), discarded.begin(), discarded.end());
    return out;
}

std::vector<Construction> t24_E(const FamilyParams& p) {
    require_m2(p);
    unsigned k = k_of(p);
    const RatFun& R = need(p.R, "R");
    const Poly& P = need(p.P, "P");
    require(!P.is_constant(), "P nonconstant");
    require(R.degree() < Degree(0), "deg(R) < 0");
    long kdeg = static_cast<long>(k) * P.derivative().degree().value();
    require(Degree(kdeg) == -R.degree().value(),
            "k*deg(P') = " + std::to_string(kdeg) + " equals -deg(R) = " + std::to_string(-R.degree().value()));
    Factorization f = factor_q(p);
    bool low_multiplicity = max_root_multiplicity(R.num()) + 1 <= k;
    if (low_multiplicity) {
        require(f.Q1.is_polynomial() && f.Q2.is_polynomial() && f.Q.is_polynomial(),
                "Q1, Q2, Q polynomials (every zero of R has multiplicity <= k - 1)");
    }
    Constant c(p.c.value_or(0));
    std::vector<Constant> ts;
    if (p.t) {
        ts = {Constant(*p.t)};
    } else if (k % 2 == 1 && !p.root1) {
        ts = {Constant(-1)};
    } else {
        ts = choose_roots(GaussianRational(-1), k, p.root1);
    }
    std::vector<std::string> notes;
    if (k == 1) {
        RatFun rp = R * RatFun(P.derivative());
        if (!(rp == RatFun(1))) {
            notes.push_back("statement-level claim R = 1/P' does not hold for k = 1: here R*P' = " + rp.to_string() +
                            "; the operative conditions R*g1 = i, R*g2 = -i are checked by verification instead");
        }
        if (!f.Q1.is_constant() || !f.Q2.is_constant()) {
            notes.push_back("statement-level claim that Q1, Q2 are constants for k = 1 does not hold here");
        }
    }
    std::vector<Constant> Pc = constants_of(P);
    std::vector<Constant> dP = constants_of(P.derivative());
    Constant half_over_i(GaussianRational(Rational(1, 2)) / kI);
    std::vector<Construction> out;
    for (const auto& t : ts) {
        require(constant_equals(pow(t, k), GaussianRational(-1)), "t^k = -1");
        std::vector<Constant> alpha;
        std::vector<Constant> dalpha_expected = scaled(dP, t + Constant(1));
        if (p.alpha) {
            alpha = constants_of(*p.alpha);
            require(same_poly(constants_of(p.alpha->derivative()), dalpha_expected), "(t + 1)*P' = alpha'");
        } else {
            alpha = snap(with_constant(scaled(Pc, t + Constant(1)), c));
        }
        std::vector<std::string> sides = {"deg(R) = " + R.degree().to_string() + " < 0",
                                          "k*deg(P') = -deg(R) = " + std::to_string(kdeg), "t^k = -1",
                                          "(t + 1)*P' = alpha'", "Q1*Q2 = Q"};
        if (low_multiplicity) sides.push_back("Q1, Q2, Q polynomials");
        if (is_constant_poly(alpha)) {
            require(constant_equals(t, GaussianRational(-1)) && k % 2 == 1, "t = -1 and k odd when alpha is constant");
            sides.push_back("t = -1, k = " + std::to_string(k) + " odd (alpha constant)");
        }
        std::vector<Summand> terms = {{half_over_i, f.Q1, with_constant(scaled(Pc, t), c)}, {-half_over_i, f.Q2, Pc}};
        out.push_back(finish("T24_E", "(Q1*exp(t*P + c) - Q2*exp(P))/(2*i)", terms, 2, k, R, f.Q, alpha,
                             {{"t", binding(t)}}, {{"t", Poly::monomial(1, k) + Poly(1)}}, sides, notes));
    }
    return out;
}

}  // namespace

std::vector<Construction> construct_t23_B(unsigned m, unsigned k, const GaussianRational& A,
                                          const GaussianRational& a, const GaussianRational& b) {
    if (m < 3) throw PreconditionViolated("T23_B requires m >= 3");
    if (k == 0) throw PreconditionViolated("k must be positive");
    if (A.is_zero() || a.is_zero()) throw PreconditionViolated("T23_B requires A and a nonzero");
    GaussianRational w = pow(A, m) * pow(a / GaussianRational(static_cast<long>(m)), k * m) + GaussianRational(1);
    if (w.is_zero()) throw FamilyError(Kind::NoSolutionInFamily, "A^m*(a/m)^(k*m) = -1, so c^m*0 = 1 has no solution");
    GaussianRational target = w.inverse();
    std::vector<Constant> exponent = {Constant(b / GaussianRational(static_cast<long>(m))),
                                      Constant(a / GaussianRational(static_cast<long>(m)))};
    std::vector<Construction> out;
    for (const auto& c : kth_roots(target, m)) {
        out.push_back(finish("T23_B", "c*exp((a*z + b)/m)", {{c, RatFun(1), exponent}}, m, k, RatFun(A), RatFun(1),
                             {Constant(b), Constant(a)}, {{"c", binding(c)}},
                             {{"c", Poly::monomial(1, m) - Poly(target)}},
                             {"m = " + std::to_string(m) + " >= 3", "Q = 1", "R = " + gr(A) + " constant",
                              "w = R^m*(a/m)^(k*m) + 1 = " + gr(w) + " != 0",
                              constraint_text("c", "1/w = " + gr(target), m)},
                             {}));
    }
    return out;
}

std::vector<Construction> construct_t23_A1(unsigned k, const GaussianRational& A, const GaussianRational& a,
                                           const GaussianRational& b) {
    if (k == 0) throw PreconditionViolated("k must be positive");
    if (A.is_zero() || a.is_zero()) throw PreconditionViolated("T23_A1 requires A and a nonzero");
    GaussianRational u = A * pow(a / GaussianRational(2), k);
    if (u == kI) throw FamilyError(Kind::FamilyDegenerate, "R*(a/2)^k = i makes d^2 undefined");
    if (u == -kI) throw FamilyError(Kind::FamilyDegenerate, "R*(a/2)^k = -i forces d = 0");
    GaussianRational d2 = (u + kI) / (u - kI);
    std::vector<Constant> exponent = {Constant(b / GaussianRational(2)), Constant(a / GaussianRational(2))};
    std::vector<Construction> out;
    for (const auto& d : kth_roots(d2, 2)) {
        Constant scale = (Constant(d2) - Constant(1)) / (Constant(GaussianRational(2) * kI) * d);
        out.push_back(finish("T23_A1", "(d^2 - 1)/(2*i*d)*exp((a*z + b)/2)", {{scale, RatFun(1), exponent}}, 2, k,
                             RatFun(A), RatFun(1), {Constant(b), Constant(a)}, {{"d", binding(d)}},
                             {{"d", Poly::monomial(1, 2) - Poly(d2)}},
                             {"m = 2", "Q = 1", "R = " + gr(A) + " constant", "u = R*(a/2)^k = " + gr(u) + " != i",
                              "d^2 = (u + i)/(u - i) = " + gr(d2)},
                             {}));
    }
    return out;
}

std::vector<Construction> construct_t23_A2(unsigned k, const GaussianRational& A, const GaussianRational& a2,
                                           const GaussianRational& b2) {
    if (k == 0) throw PreconditionViolated("k must be positive");
    if (A.is_zero()) throw PreconditionViolated("T23_A2 requires A nonzero");
    GaussianRational wu = kI / A;
    GaussianRational wv = -kI / A;
    Constant half_over_i(GaussianRational(Rational(1, 2)) / kI);
    Constant shift_u(a2 / GaussianRational(2) + kI * b2);
    Constant shift_v(a2 / GaussianRational(2) - kI * b2);
    std::vector<Construction> out;
    for (const auto& u : kth_roots(wu, k)) {
        for (const auto& v : kth_roots(wv, k)) {
            Constant a1 = u + v;
            Constant b1 = (u - v) / Constant(GaussianRational(2) * kI);
            double scale = std::abs(u.value());
            if (numerically_zero(b1, scale)) continue;
            std::vector<std::string> sides = {"m = 2", "Q = 1", "R = " + gr(A) + " constant",
                                              "R*(a1/2 + i*b1)^k = i", "R*(a1/2 - i*b1)^k = -i", "b1 != 0"};
            if (numerically_zero(a1, scale)) {
                if (k % 2 == 0) continue;  // excluded by the parity clause
                a1 = Constant(0);
                sides.push_back("a1 = 0, k = " + std::to_string(k) + " odd");
            }
            std::vector<Summand> terms = {{half_over_i, RatFun(1), {shift_u, u}}, {-half_over_i, RatFun(1), {shift_v, v}}};
            out.push_back(finish("T23_A2", "exp((a1*z + a2)/2)*sin(b1*z + b2)", terms, 2, k, RatFun(A), RatFun(1),
                                 {Constant(a2), a1},
                                 {{"u", binding(u)}, {"v", binding(v)}, {"a1", binding(a1)}, {"b1", binding(b1)}},
                                 {{"u", Poly::monomial(1, k) - Poly(wu)}, {"v", Poly::monomial(1, k) - Poly(wv)}},
                                 sides, {"u = a1/2 + i*b1, v = a1/2 - i*b1"}));
        }
    }
    if (out.empty()) throw FamilyError(Kind::EmptyFamily, "no root pair gives b1 != 0");
    return out;
}

std::vector<Construction> construct_t24(const std::string& tag, const FamilyParams& params) {
    if (tag == "T24_A") return {t24_A(params)};
    if (tag == "T24_B") return {t24_B(params)};
    if (tag == "T24_C") return t24_C(params);
    if (tag == "T24_D") return t24_D(params);
    if (tag == "T24_E") return t24_E(params);
    throw PreconditionViolated("not a T24 family tag: " + tag);
}

std::vector<Construction> construct(const std::string& tag, const FamilyParams& p) {
    auto constant_R = [&]() -> GaussianRational {
        if (p.A) return *p.A;
        return constant_of(p.R.value_or(RatFun(1)), "R");
    };
    if (tag == "T23_B") {
        return construct_t23_B(p.m.value_or(3), k_of(p), constant_R(), need(p.a, "a"), p.b.value_or(0));
    }
    if (tag == "T23_A1") {
        require_m2(p);
        return construct_t23_A1(k_of(p), constant_R(), need(p.a, "a"), p.b.value_or(0));
    }
    if (tag == "T23_A2") {
        require_m2(p);
        return construct_t23_A2(k_of(p), constant_R(), p.a2.value_or(0), p.b2.value_or(0));
    }
    return construct_t24(tag, p);
}

}  // namespace fermat
