#include "fermat/algebra.hpp"

namespace fermat {

namespace {

std::string monomial(std::string_view var, std::size_t degree) {
    std::string out(var);
    if (degree > 1) out += "^" + std::to_string(degree);
    return out;
}

// Signed summands of a polynomial, highest degree first. A coefficient with
// both real and imaginary parts is parenthesized unless it is the constant
// term, which is split into its two parts.
std::vector<std::string> summands(const Poly& p, std::string_view var) {
    std::vector<std::string> out;
    const auto& cs = p.coeffs();
    for (std::size_t d = cs.size(); d-- > 0;) {
        const GaussianRational& c = cs[d];
        if (c.is_zero()) continue;
        if (d == 0) {
            if (c.is_real() || sgn(c.re()) == 0) {
                out.push_back(c.to_string());
            } else {
                out.push_back(GaussianRational(c.re()).to_string());
                out.push_back(GaussianRational(0, c.im()).to_string());
            }
            continue;
        }
        std::string mono = monomial(var, d);
        if (c.is_one()) {
            out.push_back(mono);
        } else if (c == GaussianRational(-1)) {
            out.push_back("-" + mono);
        } else if (c.is_real() || sgn(c.re()) == 0) {
            out.push_back(c.to_string() + "*" + mono);
        } else {
            out.push_back("(" + c.to_string() + ")*" + mono);
        }
    }
    return out;
}

std::string join_signed(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::string& s = parts[j];
        if (j == 0) {
            out = s;
        } else if (!s.empty() && s[0] == '-') {
            out += " - " + s.substr(1);
        } else {
            out += " + " + s;
        }
    }
    return out;
}

bool is_atomic(const std::string& s) {
    return s.find(' ') == std::string::npos && s.find('/') == std::string::npos &&
           s.find('*') == std::string::npos && (s.empty() || s[0] != '-');
}

}  // namespace

std::string Poly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    return join_signed(summands(*this, var));
}

std::string RatFun::to_string(std::string_view var) const {
    std::string num = num_.to_string(var);
    if (den_.is_constant()) return num;
    std::string den = den_.to_string(var);
    if (num.find(' ') != std::string::npos || num.find('/') != std::string::npos) num = "(" + num + ")";
    if (!is_atomic(den)) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace fermat
