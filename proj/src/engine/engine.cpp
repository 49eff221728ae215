#include "fermat/engine.hpp"

#include <cmath>
#include <random>

#include "fermat/error.hpp"
#include "fermat/parser.hpp"
#include "jets.hpp"

namespace fermat {

namespace {

Complex ipow(Complex x, unsigned e) {
    Complex r = 1.0;
    while (e != 0) {
        if (e & 1U) r *= x;
        e >>= 1U;
        if (e != 0) x *= x;
    }
    return r;
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex sample_annulus(std::mt19937_64& rng) {
    constexpr double r0 = 0.5;
    constexpr double r1 = 2.0;
    double u = uniform(rng);
    double v = uniform(rng);
    double r = std::sqrt(r0 * r0 + u * (r1 * r1 - r0 * r0));
    return std::polar(r, 2.0 * M_PI * v);
}

bool finite(Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

}  // namespace

void FermatEquation::validate() const {
    if (m == 0 || n == 0 || k == 0) throw PreconditionViolated("m, n and k must be positive");
    if (R.is_zero()) throw PreconditionViolated("R must be nonzero");
    if (Q.is_zero()) throw PreconditionViolated("Q must be nonzero");
}

NumericEquation NumericEquation::from(const FermatEquation& eq) {
    return {eq.m, eq.n, eq.k, eq.R, eq.Q, eq.alpha.to_complex()};
}

std::string Constraint::to_string() const { return poly.to_string(name) + " = 0"; }

NumericCandidate NumericCandidate::from_exact(const ExpPoly& f) {
    NumericCandidate c;
    c.shape = print_canonical(f);
    for (const auto& [key, coeff] : f.terms()) {
        for (const auto& [shift, r] : coeff.terms()) c.terms.push_back({1.0, r, (key + Poly(shift)).to_complex()});
    }
    return c;
}

void NumericCandidate::check_constraints(double tol) const {
    for (const auto& con : constraints) {
        auto it = bindings.find(con.name);
        if (it == bindings.end()) throw ConstraintViolation("no binding for constant " + con.name);
        Complex x = it->second;
        Complex value = 0.0;
        double scale = 1.0;
        double xp = 1.0;
        const auto& cs = con.poly.coeffs();
        for (std::size_t j = cs.size(); j-- > 0;) value = value * x + cs[j].to_complex();
        double sum = 0.0;
        for (const auto& c : cs) {
            sum += std::abs(c.to_complex()) * xp;
            xp *= std::abs(x);
        }
        scale = std::max(scale, sum);
        if (!(std::abs(value) <= tol * scale)) {
            throw ConstraintViolation("binding " + con.name + " violates " + con.to_string());
        }
    }
}

std::vector<Complex> candidate_derivatives(const NumericCandidate& cand, Complex z, unsigned order) {
    jets::Series total(order + 1, Complex(0.0));
    for (const auto& t : cand.terms) {
        jets::Series s = jets::mul(jets::of(t.coeff, z, order), jets::exp(jets::taylor(t.exponent, z, order)));
        for (std::size_t j = 0; j <= order; ++j) total[j] += t.scale * s[j];
    }
    double factorial = 1.0;
    for (std::size_t j = 1; j <= order; ++j) {
        factorial *= static_cast<double>(j);
        total[j] *= factorial;
    }
    return total;
}

ExpPoly lhs_expand(const FermatEquation& eq, const ExpPoly& f) {
    ExpPoly g = f.derivative(eq.k) * eq.R;
    return pow(f, eq.m) + pow(g, eq.n);
}

ExpPoly rhs_expand(const FermatEquation& eq) { return ExpPoly::from_term(eq.Q, eq.alpha); }

VerificationReport verify_exact(const FermatEquation& eq, const ExpPoly& f) {
    eq.validate();
    if (f.is_zero()) throw PreconditionViolated("candidate f must be nonzero");
    VerificationReport rep;
    rep.mode = VerificationReport::Mode::Exact;
    rep.residual = lhs_expand(eq, f) - rhs_expand(eq);
    rep.verified = rep.residual.is_zero();
    return rep;
}

VerificationReport verify_numeric(const NumericEquation& eq, const NumericCandidate& cand,
                                  const NumericOptions& opts) {
    if (eq.m == 0 || eq.n == 0 || eq.k == 0) throw PreconditionViolated("m, n and k must be positive");
    if (opts.points == 0) throw PreconditionViolated("at least one sample point is required");
    cand.check_constraints();
    VerificationReport rep;
    rep.mode = VerificationReport::Mode::Numeric;
    std::mt19937_64 rng(opts.seed);
    const unsigned max_draws = 10 * opts.points;
    unsigned draws = 0;
    while (rep.samples.size() < opts.points) {
        if (draws == max_draws) throw AllPointsRejected();
        ++draws;
        Complex z = sample_annulus(rng);
        double res;
        try {
            Complex r = eq.R.eval(z);
            Complex q = eq.Q.eval(z);
            Complex a = eval(eq.alpha, z);
            if (std::abs(a) > 700.0) throw OverflowAtSamplePoint();
            std::vector<Complex> d = candidate_derivatives(cand, z, eq.k);
            Complex lhs = ipow(d[0], eq.m) + ipow(r * d[eq.k], eq.n);
            Complex rhs = q * std::exp(a);
            if (!finite(lhs) || !finite(rhs)) continue;
            res = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        } catch (const PoleAtSamplePoint&) {
            continue;
        } catch (const OverflowAtSamplePoint&) {
            continue;
        }
        rep.samples.push_back(z);
        rep.max_residual = std::max(rep.max_residual, res);
    }
    rep.verified = rep.max_residual < opts.tol;
    return rep;
}

VerificationReport verify_numeric(const FermatEquation& eq, const NumericCandidate& cand,
                                  const NumericOptions& opts) {
    eq.validate();
    return verify_numeric(NumericEquation::from(eq), cand, opts);
}

DegreeCondition degree_condition(const FermatEquation& eq, const RatFun& R1) {
    eq.validate();
    if (eq.m != eq.n) throw PreconditionViolated("degree condition requires m = n");
    if (eq.alpha.is_constant()) throw PreconditionViolated("degree condition requires nonconstant alpha");
    if (R1.is_zero()) throw PreconditionViolated("R1 must be nonzero");
    RatFun diff = eq.Q - pow(R1, eq.m);
    if (diff.is_zero()) throw DegenerateDifference();
    long m = eq.m;
    Degree lhs = (m * static_cast<long>(eq.k)) * eq.alpha.derivative().degree();
    Degree rhs = diff.degree() - m * (eq.R * R1).degree();
    return {lhs, rhs};
}

Decomposition canonical_decompose(const FermatEquation& eq, const ExpPoly& f) {
    eq.validate();
    if (eq.m != 2 || eq.n != 2) throw PreconditionViolated("decomposition requires m = n = 2");
    if (f.is_zero()) throw PreconditionViolated("candidate f must be nonzero");
    ExpPoly g = f.derivative(eq.k) * eq.R;
    ExpPoly if_ = f * RatFun(GaussianRational::i());
    Decomposition d{g + if_, g - if_};
    if (!d.u.is_single_term() || !d.v.is_single_term()) throw NotMonomialPair();
    d.product_matches = (d.u * d.v - rhs_expand(eq)).is_zero();
    return d;
}

}  // namespace fermat
