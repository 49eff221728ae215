#pragma once

// Exact arithmetic over Q(i): Gaussian rationals, univariate polynomials and
// reduced rational functions, together with the degree calculus
// deg(P/Q) = deg P - deg Q, deg 0 = -inf.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fermat {

using Rational = mpq_class;
using Complex = std::complex<double>;

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical text, e.g. "3", "-1/2", "i", "2*i", "1 - 1/2*i".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Lexicographic on (re, im); a total order used for map keys and printing.
int compare(const GaussianRational& a, const GaussianRational& b);

struct GaussianLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const { return compare(a, b) < 0; }
};

GaussianRational pow(GaussianRational base, unsigned exponent);

/// Degree of a polynomial or rational function. The zero function has degree
/// -inf, which sits below every integer and absorbs addition.
class Degree {
public:
    constexpr Degree(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    static constexpr Degree neg_infinity() { return Degree(Tag{}); }

    constexpr bool is_neg_infinity() const noexcept { return neg_inf_; }
    long value() const;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.neg_inf_ || b.neg_inf_) return neg_infinity();
        return Degree(a.value_ + b.value_);
    }
    /// Requires b finite (the degree of a nonzero divisor).
    friend Degree operator-(Degree a, Degree b);
    friend Degree operator*(long factor, Degree d);

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

private:
    struct Tag {};
    constexpr explicit Degree(Tag) : value_(0), neg_inf_(true) {}

    long value_;
    bool neg_inf_ = false;
};

/// Dense univariate polynomial over Q(i), coefficients stored from degree 0
/// upward. The leading coefficient is nonzero; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs);
    Poly(GaussianRational constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)

    static Poly z() { return Poly(std::vector<GaussianRational>{0, 1}); }
    static Poly monomial(GaussianRational c, std::size_t degree);

    const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
    Degree degree() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const GaussianRational& leading() const;
    GaussianRational coeff(std::size_t d) const;
    GaussianRational constant_term() const { return coeff(0); }
    /// Copy with the constant coefficient cleared.
    Poly without_constant() const;

    Poly derivative() const;
    Poly monic() const;
    GaussianRational eval(const GaussianRational& x) const;
    Complex eval(Complex x) const;
    std::vector<Complex> to_complex() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Text in the parser grammar using the given variable name.
    std::string to_string(std::string_view var = "z") const;

private:
    void trim();

    std::vector<GaussianRational> coeffs_;
};

/// Canonical ordering: higher degree first, then coefficients compared from
/// the top degree down.
int compare(const Poly& a, const Poly& b);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

Poly pow(const Poly& base, unsigned exponent);

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

/// Monic gcd via a primitive pseudo-remainder sequence over Z[i].
Poly gcd(const Poly& p, const Poly& q);

/// Largest multiplicity of any root of p. p must be nonzero; constants give 0.
unsigned max_root_multiplicity(const Poly& p);

/// Reduced quotient num/den with den monic and gcd(num, den) = 1.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(GaussianRational c) : RatFun(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Poly(c)) {}  // NOLINT(google-explicit-constructor)

    /// Cancels the gcd and rescales den to be monic. Idempotent.
    static RatFun normalized(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Degree degree() const;

    RatFun derivative() const;
    RatFun inverse() const;
    Complex eval(Complex z) const;

    RatFun operator-() const { return from_parts(-num_, den_); }
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string(std::string_view var = "z") const;

private:
    static RatFun from_parts(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

RatFun pow(const RatFun& base, unsigned exponent);

int compare(const RatFun& a, const RatFun& b);

}  // namespace fermat
