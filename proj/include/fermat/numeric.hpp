#pragma once

// Double-precision companions of the exact types: complex polynomials and
// constants that may or may not have an exact Gaussian-rational form.

#include <optional>
#include <vector>

#include "fermat/algebra.hpp"

namespace fermat {

/// Complex polynomial, coefficients from degree 0 upward.
using CPoly = std::vector<Complex>;

Complex eval(const CPoly& p, Complex z);

/// A family constant. Roots of constraint polynomials are usually only known
/// numerically; when the exact value is a Gaussian rational it is carried too.
class Constant {
public:
    Constant(GaussianRational exact);  // NOLINT(google-explicit-constructor)
    Constant(long exact) : Constant(GaussianRational(exact)) {}  // NOLINT(google-explicit-constructor)
    static Constant numeric(Complex value) { return Constant(value); }

    Complex value() const noexcept { return value_; }
    const std::optional<GaussianRational>& exact() const noexcept { return exact_; }
    bool is_exact() const noexcept { return exact_.has_value(); }

    Constant operator-() const;
    friend Constant operator+(const Constant& a, const Constant& b);
    friend Constant operator-(const Constant& a, const Constant& b);
    friend Constant operator*(const Constant& a, const Constant& b);
    friend Constant operator/(const Constant& a, const Constant& b);

private:
    explicit Constant(Complex value) : value_(value) {}

    Complex value_;
    std::optional<GaussianRational> exact_;
};

Constant pow(const Constant& base, unsigned exponent);

/// Exact polynomial when every coefficient is exact.
std::optional<Poly> exact_poly(const std::vector<Constant>& coeffs);
CPoly numeric_poly(const std::vector<Constant>& coeffs);

/// Recovers a Gaussian rational x close to value with constraint(x) == 0
/// exactly, searching continued-fraction convergents of both parts.
std::optional<GaussianRational> recover_exact(Complex value, const Poly& constraint);

}  // namespace fermat
