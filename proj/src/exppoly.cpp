#include "fermat/exppoly.hpp"

#include <cmath>

#include "fermat/error.hpp"

namespace fermat {

ExpCoeff::ExpCoeff(GaussianRational shift, RatFun coeff) {
    if (!coeff.is_zero()) terms_.emplace(std::move(shift), std::move(coeff));
}

void ExpCoeff::add(const GaussianRational& shift, const RatFun& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(shift, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ExpCoeff ExpCoeff::operator-() const {
    ExpCoeff out = *this;
    for (auto& [shift, coeff] : out.terms_) coeff = -coeff;
    return out;
}

ExpCoeff& ExpCoeff::operator+=(const ExpCoeff& o) {
    for (const auto& [shift, coeff] : o.terms_) add(shift, coeff);
    return *this;
}

ExpCoeff& ExpCoeff::operator-=(const ExpCoeff& o) {
    for (const auto& [shift, coeff] : o.terms_) add(shift, -coeff);
    return *this;
}

ExpCoeff operator*(const ExpCoeff& a, const ExpCoeff& b) {
    ExpCoeff out;
    for (const auto& [sa, ra] : a.terms_) {
        for (const auto& [sb, rb] : b.terms_) out.add(sa + sb, ra * rb);
    }
    return out;
}

ExpCoeff operator*(const ExpCoeff& a, const RatFun& r) {
    ExpCoeff out;
    if (r.is_zero()) return out;
    for (const auto& [shift, coeff] : a.terms_) out.terms_.emplace(shift, coeff * r);
    return out;
}

ExpPoly::ExpPoly(RatFun coeff) {
    if (!coeff.is_zero()) terms_.emplace(Poly(), ExpCoeff(GaussianRational(), std::move(coeff)));
}

ExpPoly ExpPoly::from_term(const RatFun& coeff, const Poly& exponent) {
    ExpPoly out;
    if (coeff.is_zero()) return out;
    out.terms_.emplace(exponent.without_constant(), ExpCoeff(exponent.constant_term(), coeff));
    return out;
}

std::size_t ExpPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& [key, coeff] : terms_) n += coeff.terms().size();
    return n;
}

void ExpPoly::add_term(const Poly& key, const ExpCoeff& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly ExpPoly::derivative(unsigned k) const {
    ExpPoly current = *this;
    for (unsigned step = 0; step < k; ++step) {
        ExpPoly next;
        for (const auto& [key, coeff] : current.terms_) {
            RatFun key_deriv(key.derivative());
            ExpCoeff dc;
            // D[R exp(c) e^P] = (R' + R P') exp(c) e^P
            for (const auto& [shift, r] : coeff.terms()) dc.add(shift, r.derivative() + r * key_deriv);
            next.add_term(key, dc);
        }
        current = std::move(next);
    }
    return current;
}

Complex ExpPoly::eval(Complex z) const {
    Complex total = 0.0;
    for (const auto& [key, coeff] : terms_) {
        Complex p = key.eval(z);
        if (std::abs(p) > 700.0) throw OverflowAtSamplePoint();
        Complex e = std::exp(p);
        for (const auto& [shift, r] : coeff.terms()) total += r.eval(z) * std::exp(shift.to_complex()) * e;
    }
    return total;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly out = *this;
    for (auto& [key, coeff] : out.terms_) coeff = -coeff;
    return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const RatFun& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff = coeff * r;
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    }
    return out;
}

ExpPoly pow(const ExpPoly& base, unsigned exponent) {
    ExpPoly result(RatFun(1));
    ExpPoly b = base;
    while (exponent != 0) {
        if (exponent & 1U) result = result * b;
        exponent >>= 1U;
        if (exponent != 0) b = b * b;
    }
    return result;
}

}  // namespace fermat
