#include "fermat/numeric.hpp"

#include <cmath>

#include "fermat/error.hpp"

namespace fermat {

Complex eval(const CPoly& p, Complex z) {
    Complex acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Constant::Constant(GaussianRational exact) : value_(exact.to_complex()), exact_(std::move(exact)) {}

Constant Constant::operator-() const {
    Constant out(-value_);
    if (exact_) out.exact_ = -*exact_;
    return out;
}

Constant operator+(const Constant& a, const Constant& b) {
    if (a.exact_ && b.exact_) return {*a.exact_ + *b.exact_};
    return Constant(a.value_ + b.value_);
}

Constant operator-(const Constant& a, const Constant& b) {
    if (a.exact_ && b.exact_) return {*a.exact_ - *b.exact_};
    return Constant(a.value_ - b.value_);
}

Constant operator*(const Constant& a, const Constant& b) {
    if (a.exact_ && b.exact_) return {*a.exact_ * *b.exact_};
    // an exact zero annihilates a numeric factor
    if ((a.exact_ && a.exact_->is_zero()) || (b.exact_ && b.exact_->is_zero())) return {GaussianRational()};
    return Constant(a.value_ * b.value_);
}

Constant operator/(const Constant& a, const Constant& b) {
    if (b.exact_ && b.exact_->is_zero()) throw DivisionByZero();
    if (a.exact_ && b.exact_) return {*a.exact_ / *b.exact_};
    if (a.exact_ && a.exact_->is_zero()) return {GaussianRational()};
    return Constant(a.value_ / b.value_);
}

Constant pow(const Constant& base, unsigned exponent) {
    Constant result(1);
    for (unsigned j = 0; j < exponent; ++j) result = result * base;
    return result;
}

std::optional<Poly> exact_poly(const std::vector<Constant>& coeffs) {
    std::vector<GaussianRational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_exact()) return std::nullopt;
        out.push_back(*c.exact());
    }
    return Poly(std::move(out));
}

CPoly numeric_poly(const std::vector<Constant>& coeffs) {
    CPoly out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.value());
    return out;
}

namespace {

constexpr long kMaxDenominator = 100000;

std::vector<Rational> convergents(double x) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    out.emplace_back(0);
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    out.emplace_back(h);
    for (int step = 0; step < 40 && frac > 1e-13; ++step) {
        double inv = 1.0 / frac;
        auto a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > kMaxDenominator) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        Rational r(h, k);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::optional<GaussianRational> recover_exact(Complex value, const Poly& constraint) {
    double tol = 1e-9 * std::max(1.0, std::abs(value));
    auto res = convergents(value.real());
    auto ims = convergents(value.imag());
    for (auto it_re = res.rbegin(); it_re != res.rend(); ++it_re) {
        if (std::abs(it_re->get_d() - value.real()) > tol) continue;
        for (auto it_im = ims.rbegin(); it_im != ims.rend(); ++it_im) {
            if (std::abs(it_im->get_d() - value.imag()) > tol) continue;
            GaussianRational candidate(*it_re, *it_im);
            if (constraint.eval(candidate).is_zero()) return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace fermat
