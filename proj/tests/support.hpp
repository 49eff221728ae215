#pragma once

// Hand-rolled random generators and numeric helpers shared by the unit tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fermat/algebra.hpp"
#include "fermat/exppoly.hpp"

namespace testgen {

using fermat::Complex;
using fermat::ExpPoly;
using fermat::GaussianRational;
using fermat::Poly;
using fermat::Rational;
using fermat::RatFun;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Rational rational(long num = 5, long den = 4) {
        Rational q(integer(-num, num), integer(1, den));
        q.canonicalize();
        return q;
    }

    GaussianRational gaussian(long num = 5, long den = 4) {
        return {rational(num, den), coin() ? rational(num, den) : Rational(0)};
    }

    GaussianRational nonzero_gaussian(long num = 5, long den = 4) {
        for (;;) {
            GaussianRational g = gaussian(num, den);
            if (!g.is_zero()) return g;
        }
    }

    /// Degree at most max_degree (possibly zero polynomial unless nonzero).
    Poly poly(unsigned max_degree, bool nonzero = false, long num = 5, long den = 4) {
        for (;;) {
            std::vector<GaussianRational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
            for (auto& x : c) x = gaussian(num, den);
            Poly p(c);
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    /// Exactly the given degree (degree >= 0).
    Poly poly_of_degree(unsigned degree, long num = 5, long den = 4) {
        std::vector<GaussianRational> c(degree + 1);
        for (auto& x : c) x = gaussian(num, den);
        c.back() = nonzero_gaussian(num, den);
        return Poly(c);
    }

    RatFun ratfun(unsigned num_degree = 3, unsigned den_degree = 2, bool nonzero = false) {
        for (;;) {
            Poly n = poly(num_degree, nonzero);
            Poly d = poly(den_degree, true);
            RatFun r = RatFun::normalized(n, d);
            if (!nonzero || !r.is_zero()) return r;
        }
    }

    /// Nonconstant rational function, not a polynomial.
    RatFun proper_ratfun() {
        for (;;) {
            RatFun r = ratfun(3, 2, true);
            if (!r.is_polynomial()) return r;
        }
    }

    /// Poles kept outside |z| <= 1.5 so sampling in the unit disc is safe.
    RatFun tame_ratfun() {
        Poly num = poly(2, true);
        Poly den(1);
        int factors = static_cast<int>(integer(0, 2));
        for (int j = 0; j < factors; ++j) {
            GaussianRational p;
            do {
                p = gaussian(6, 1);
            } while (p.norm() < 4);
            den *= Poly::z() - Poly(p);
        }
        return RatFun::normalized(num, den);
    }

    /// Exponent polynomial with small coefficients, degree <= max_degree.
    Poly exponent(unsigned max_degree) { return poly(max_degree, false, 2, 2); }

    ExpPoly exppoly(unsigned max_terms = 4, unsigned max_degree = 3, bool tame = false) {
        ExpPoly e;
        long terms = integer(1, max_terms);
        for (long j = 0; j < terms; ++j) {
            RatFun c = tame ? tame_ratfun() : ratfun(2, 1, true);
            e += ExpPoly::from_term(c, exponent(max_degree));
        }
        return e;
    }

    /// Area-uniform point in the annulus lo <= |z| <= hi.
    Complex annulus(double lo, double hi) {
        double r = std::sqrt(uniform(lo * lo, hi * hi));
        return std::polar(r, uniform(-M_PI, M_PI));
    }

    Complex disc(double radius) { return annulus(0.0, radius); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

}  // namespace testgen
