#include <algorithm>

#include "fermat/algebra.hpp"
#include "fermat/error.hpp"

namespace fermat {

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(GaussianRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(GaussianRational c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
    if (coeffs_.empty()) return Degree::neg_infinity();
    return Degree(static_cast<long>(coeffs_.size()) - 1);
}

const GaussianRational& Poly::leading() const {
    if (coeffs_.empty()) throw PreconditionViolated("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

GaussianRational Poly::coeff(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : GaussianRational();
}

Poly Poly::without_constant() const {
    Poly out = *this;
    if (!out.coeffs_.empty()) {
        out.coeffs_[0] = GaussianRational();
        out.trim();
    }
    return out;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) {
        out[d - 1] = coeffs_[d] * GaussianRational(static_cast<long>(d));
    }
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (coeffs_.empty()) return {};
    return *this * leading().inverse();
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Complex Poly::eval(Complex x) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::vector<Complex> Poly::to_complex() const {
    std::vector<Complex> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_complex());
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

int compare(const Poly& a, const Poly& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    if (ca.size() != cb.size()) return ca.size() > cb.size() ? -1 : 1;
    for (std::size_t d = ca.size(); d-- > 0;) {
        if (int c = compare(ca[d], cb[d]); c != 0) return c;
    }
    return 0;
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result(1);
    Poly b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw DivisionByZero();
    std::vector<GaussianRational> rem = p.coeffs();
    const auto& qc = q.coeffs();
    if (rem.size() < qc.size()) return {Poly(), p};
    GaussianRational lead_inv = q.leading().inverse();
    std::vector<GaussianRational> quot(rem.size() - qc.size() + 1);
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        GaussianRational factor = rem[shift + qc.size() - 1] * lead_inv;
        quot[shift] = factor;
        if (!factor.is_zero()) {
            for (std::size_t d = 0; d < qc.size(); ++d) rem[shift + d] -= factor * qc[d];
        }
    }
    rem.resize(qc.size() - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

// Gaussian integers live in GaussianRational with unit denominators; these
// helpers assume that and never divide.

struct GaussInt {
    mpz_class re;
    mpz_class im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den for den > 0
    mpz_class twice = 2 * num + den;
    mpz_class twice_den = 2 * den;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
    return q;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        mpz_class n = b.re * b.re + b.im * b.im;
        mpz_class qre = round_div(a.re * b.re + a.im * b.im, n);
        mpz_class qim = round_div(a.im * b.re - a.re * b.im, n);
        GaussInt r{a.re - (qre * b.re - qim * b.im), a.im - (qre * b.im + qim * b.re)};
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Scales p to Gaussian-integer coefficients with unit content.
Poly primitive_part(const Poly& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<GaussInt> ints;
    ints.reserve(p.coeffs().size());
    GaussInt content{0, 0};
    for (const auto& c : p.coeffs()) {
        Rational re = c.re() * Rational(lcm_den);
        Rational im = c.im() * Rational(lcm_den);
        GaussInt g{re.get_num(), im.get_num()};
        content = gauss_gcd(content, g);
        ints.push_back(std::move(g));
    }
    // x / content == x * conj(content) / N(content), exact in Z[i]
    mpz_class n = content.re * content.re + content.im * content.im;
    std::vector<GaussianRational> out;
    out.reserve(ints.size());
    for (const auto& g : ints) {
        mpz_class re = (g.re * content.re + g.im * content.im) / n;
        mpz_class im = (g.im * content.re - g.re * content.im) / n;
        out.emplace_back(Rational(re), Rational(im));
    }
    return Poly(std::move(out));
}

// lc(b)^e * a mod b, computed without any division.
Poly pseudo_remainder(Poly a, const Poly& b) {
    const GaussianRational& lc = b.leading();
    long db = b.degree().value();
    while (!a.is_zero() && a.degree().value() >= db) {
        auto shift = static_cast<std::size_t>(a.degree().value() - db);
        Poly step = Poly::monomial(a.leading(), shift) * b;
        a = a * lc - step;
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    Poly a = primitive_part(p);
    Poly b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return Poly(1);
        Poly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? Poly() : primitive_part(r);
    }
    return a.monic();
}

unsigned max_root_multiplicity(const Poly& p) {
    if (p.is_zero()) throw PreconditionViolated("root multiplicity of the zero polynomial");
    // a root has multiplicity > j iff it is a common root of p, p', ..., p^(j)
    unsigned mult = 0;
    Poly common = p;
    Poly deriv = p;
    while (!common.is_constant()) {
        ++mult;
        deriv = deriv.derivative();
        common = gcd(common, deriv);
    }
    return mult;
}

}  // namespace fermat
