#include <cmath>

#include "fermat/algebra.hpp"
#include "fermat/error.hpp"

namespace fermat {

RatFun RatFun::from_parts(Poly num, Poly den) {
    RatFun r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFun RatFun::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return {};
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    GaussianRational scale = den.leading().inverse();
    return from_parts(num * scale, den * scale);
}

Degree RatFun::degree() const {
    if (num_.is_zero()) return Degree::neg_infinity();
    return num_.degree() - den_.degree();
}

RatFun RatFun::derivative() const {
    if (den_.is_constant()) return from_parts(num_.derivative(), den_);
    return normalized(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return normalized(den_, num_);
}

Complex RatFun::eval(Complex z) const {
    Complex n = num_.eval(z);
    Complex d = den_.eval(z);
    // near a root the denominator cancels against its own term magnitudes
    double scale = 0.0, r = std::abs(z), power = 1.0;
    for (const auto& c : den_.coeffs()) {
        scale += std::abs(c.to_complex()) * power;
        power *= r;
    }
    if (std::abs(d) <= 1e-12 * scale) throw PoleAtSamplePoint();
    return n / d;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_) {
        *this = normalized(num_ + o.num_, den_);
    } else {
        *this = normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFun();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    // cross-cancel before multiplying to keep the gcd inputs small
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : divmod(num_, g1).first;
    Poly d2 = g1.is_constant() ? o.den_ : divmod(o.den_, g1).first;
    Poly n2 = g2.is_constant() ? o.num_ : divmod(o.num_, g2).first;
    Poly d1 = g2.is_constant() ? den_ : divmod(den_, g2).first;
    Poly den = d1 * d2;
    GaussianRational scale = den.leading().inverse();
    *this = from_parts(n1 * n2 * scale, den * scale);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun pow(const RatFun& base, unsigned exponent) {
    if (base.is_zero()) return exponent == 0 ? RatFun(1) : RatFun();
    // coprime parts stay coprime under powers
    Poly num = pow(base.num(), exponent);
    Poly den = pow(base.den(), exponent);
    return RatFun::normalized(std::move(num), std::move(den));
}

int compare(const RatFun& a, const RatFun& b) {
    if (int c = compare(a.num(), b.num()); c != 0) return c;
    return compare(a.den(), b.den());
}

}  // namespace fermat
