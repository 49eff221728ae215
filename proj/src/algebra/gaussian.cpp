#include "fermat/algebra.hpp"

#include "fermat/error.hpp"

namespace fermat {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

namespace {

std::string imag_part(const Rational& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return imag_part(im_);
    std::string out = re_.get_str();
    if (sgn(im_) < 0) {
        out += " - " + imag_part(Rational(-im_));
    } else {
        out += " + " + imag_part(im_);
    }
    return out;
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    if (int c = cmp(a.re(), b.re()); c != 0) return c < 0 ? -1 : 1;
    int c = cmp(a.im(), b.im());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

GaussianRational pow(GaussianRational base, unsigned exponent) {
    GaussianRational result(1);
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

long Degree::value() const {
    if (neg_inf_) throw PreconditionViolated("degree of the zero function is -inf");
    return value_;
}

Degree operator-(Degree a, Degree b) {
    if (b.neg_inf_) throw PreconditionViolated("subtracting the degree of zero");
    if (a.neg_inf_) return Degree::neg_infinity();
    return Degree(a.value_ - b.value_);
}

Degree operator*(long factor, Degree d) {
    if (d.neg_inf_) return d;
    return Degree(factor * d.value_);
}

}  // namespace fermat
