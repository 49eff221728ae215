#include "fermat/parser.hpp"

namespace fermat {

namespace {

std::string exp_term(const RatFun& r, const Poly& exponent) {
    std::string coeff = r.to_string();
    if (exponent.is_zero()) return coeff;
    std::string e = "exp(" + exponent.to_string() + ")";
    if (r == RatFun(1)) return e;
    if (r == RatFun(-1)) return "-" + e;
    if (coeff.find(' ') != std::string::npos || !r.is_polynomial()) coeff = "(" + coeff + ")";
    return coeff + "*" + e;
}

}  // namespace

std::string print_canonical(const ExpPoly& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : e.terms()) {
        for (const auto& [shift, r] : coeff.terms()) {
            std::string s = exp_term(r, key + Poly(shift));
            if (first) {
                out = s;
                first = false;
            } else if (s[0] == '-') {
                out += " - " + s.substr(1);
            } else {
                out += " + " + s;
            }
        }
    }
    return out;
}

std::string print_canonical(const ParsedExpr& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExpPoly>) {
                return print_canonical(v);
            } else {
                return v.to_string();
            }
        },
        e);
}

}  // namespace fermat
