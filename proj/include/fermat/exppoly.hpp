#pragma once

// Exponential polynomials  sum_j R_j(z) * exp(c_j) * e^{P_j(z)}  with rational
// function coefficients R_j, Gaussian-rational shifts c_j and polynomial
// exponents P_j without constant term.
//
// Zero test. Storage is canonical: a key P_j has zero constant term, the
// constant part of an exponent lives in the formal factor exp(c_j), and no
// stored coefficient is zero. The value is identically zero iff nothing is
// stored, because
//   * exponentials e^{P} with pairwise distinct non-constant parts P are
//     linearly independent over the field of rational functions, and
//   * for one fixed P, the numbers exp(c) over distinct algebraic c are
//     linearly independent over the algebraic numbers (Lindemann-Weierstrass),
//     and every coefficient of every R_j lies in Q(i).
// So is_zero() is an exact decision, not a numerical heuristic.

#include <map>

#include "fermat/algebra.hpp"

namespace fermat {

/// sum_c R_c * exp(c); zero iff empty.
class ExpCoeff {
public:
    using Map = std::map<GaussianRational, RatFun, GaussianLess>;

    ExpCoeff() = default;
    ExpCoeff(GaussianRational shift, RatFun coeff);

    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const GaussianRational& shift, const RatFun& coeff);

    ExpCoeff operator-() const;
    ExpCoeff& operator+=(const ExpCoeff& o);
    ExpCoeff& operator-=(const ExpCoeff& o);
    friend ExpCoeff operator+(ExpCoeff a, const ExpCoeff& b) { return a += b; }
    friend ExpCoeff operator-(ExpCoeff a, const ExpCoeff& b) { return a -= b; }
    friend ExpCoeff operator*(const ExpCoeff& a, const ExpCoeff& b);
    friend ExpCoeff operator*(const ExpCoeff& a, const RatFun& r);
    friend bool operator==(const ExpCoeff& a, const ExpCoeff& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

class ExpPoly {
public:
    using Map = std::map<Poly, ExpCoeff, PolyLess>;

    ExpPoly() = default;
    ExpPoly(RatFun coeff);  // NOLINT(google-explicit-constructor)

    /// coeff * e^{exponent}; the constant term of exponent moves into exp(c).
    static ExpPoly from_term(const RatFun& coeff, const Poly& exponent);

    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Number of (exponent, shift) pairs.
    std::size_t term_count() const;
    /// True for a single R*exp(c)*e^{P}.
    bool is_single_term() const { return term_count() == 1; }

    ExpPoly derivative(unsigned k = 1) const;
    /// Numeric value; throws PoleAtSamplePoint, or OverflowAtSamplePoint
    /// when |P(z)| > 700 for some exponent.
    Complex eval(Complex z) const;

    ExpPoly operator-() const;
    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const RatFun& r);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(ExpPoly a, const RatFun& r) { return a *= r; }
    friend ExpPoly operator*(const RatFun& r, ExpPoly a) { return a *= r; }
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Poly& key, const ExpCoeff& coeff);

    Map terms_;
};

ExpPoly pow(const ExpPoly& base, unsigned exponent);

}  // namespace fermat
