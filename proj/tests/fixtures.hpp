#pragma once

// Concrete equations with known solutions, plus hand-derived closed forms of
// f and f^(k) used as an evaluation oracle independent of the library.

#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fermat/engine.hpp"
#include "fermat/parser.hpp"

namespace fixtures {

using C = std::complex<double>;

struct Fixture {
    std::string name;
    unsigned m, n, k;
    std::string R, Q, alpha, f;
    bool solves;  // expected verdict
    std::function<C(C)> R_at, Q_at, alpha_at, f_at, fk_at;

    fermat::FermatEquation equation() const {
        return {m, n, k, fermat::parse_ratfun(R), fermat::parse_ratfun(Q), fermat::parse_poly(alpha)};
    }
    fermat::ExpPoly candidate() const { return fermat::parse_exppoly(f); }

    /// Largest relative residual of the closed forms over the given points.
    double oracle_residual(const std::vector<C>& points) const {
        double worst = 0.0;
        for (C z : points) {
            C lhs = std::pow(f_at(z), static_cast<int>(m)) + std::pow(R_at(z) * fk_at(z), static_cast<int>(n));
            C rhs = Q_at(z) * std::exp(alpha_at(z));
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
        }
        return worst;
    }
};

inline void PrintTo(const Fixture& fx, std::ostream* os) { *os << fx.name; }

inline const C I(0.0, 1.0);

inline std::string example1_Q() { return "((z-1)/(z+1))^2 + ((z^2+1)*(z^2+3)/(2*(z+1)^3))^2"; }

// Numerator as given for the second example, and the numerator that
// R1^3 + R^3 e^{-alpha}((R1 e^{alpha/3})')^3 actually expands to.
inline std::string example2_given_numerator() { return "z^9+3*z^8+3*z^7+4*z^6+11*z^5+3*z^4+4*z^3+1"; }
inline std::string example2_expanded_numerator() { return "z^9+3*z^8+3*z^7+5*z^6+9*z^5+6*z^4+4*z^3+3*z^2+1"; }

inline Fixture example1() {
    return {"example1", 2, 2, 1, "(z^2+1)/(z+1)", example1_Q(), "z", "((z-1)/(z+1))*exp(z/2)", true,
            [](C z) { return (z * z + 1.0) / (z + 1.0); },
            [](C z) {
                C a = (z - 1.0) / (z + 1.0);
                C b = (z * z + 1.0) * (z * z + 3.0) / (2.0 * std::pow(z + 1.0, 3));
                return a * a + b * b;
            },
            [](C z) { return z; },
            [](C z) { return (z - 1.0) / (z + 1.0) * std::exp(z / 2.0); },
            [](C z) { return (2.0 / ((z + 1.0) * (z + 1.0)) + (z - 1.0) / (2.0 * (z + 1.0))) * std::exp(z / 2.0); }};
}

inline Fixture example2(bool given) {
    std::string num = given ? example2_given_numerator() : example2_expanded_numerator();
    auto Qf = given ? std::function<C(C)>([](C z) {
        return (std::pow(z, 9) + 3.0 * std::pow(z, 8) + 3.0 * std::pow(z, 7) + 4.0 * std::pow(z, 6) +
                11.0 * std::pow(z, 5) + 3.0 * std::pow(z, 4) + 4.0 * std::pow(z, 3) + 1.0) /
               std::pow(z, 3);
    })
                      : std::function<C(C)>([](C z) {
                            // (z+1)^3 + (1 + (z+1) z^2)^3 / z^3
                            return std::pow(z + 1.0, 3) + std::pow(1.0 + (z + 1.0) * z * z, 3) / std::pow(z, 3);
                        });
    return {given ? "example2_given" : "example2_expanded", 3, 3, 1, "1/z", "(" + num + ")/z^3", "z^3",
            "(z+1)*exp(z^3/3)", !given,
            [](C z) { return 1.0 / z; }, Qf, [](C z) { return z * z * z; },
            [](C z) { return (z + 1.0) * std::exp(z * z * z / 3.0); },
            [](C z) { return (1.0 + (z + 1.0) * z * z) * std::exp(z * z * z / 3.0); }};
}

inline Fixture intro_example() {
    return {"intro", 1, 1, 2, "z", "1+2*z+4*z^3", "z^2", "exp(z^2)", true,
            [](C z) { return z; }, [](C z) { return 1.0 + 2.0 * z + 4.0 * z * z * z; }, [](C z) { return z * z; },
            [](C z) { return std::exp(z * z); }, [](C z) { return (2.0 + 4.0 * z * z) * std::exp(z * z); }};
}

inline Fixture sine() {
    return {"sine", 2, 2, 1, "1", "1", "0", "(exp(i*z)-exp(-i*z))/(2*i)", true,
            [](C) { return C(1.0); }, [](C) { return C(1.0); }, [](C) { return C(0.0); },
            [](C z) { return std::sin(z); }, [](C z) { return std::cos(z); }};
}

inline Fixture t24e_example() {
    return {"t24e", 2, 2, 1, "-i/(2*z)", "1", "0", "(exp(-z^2)-exp(z^2))/(2*i)", true,
            [](C z) { return -I / (2.0 * z); }, [](C) { return C(1.0); }, [](C) { return C(0.0); },
            [](C z) { return (std::exp(-z * z) - std::exp(z * z)) / (2.0 * I); },
            [](C z) { return (-2.0 * z * std::exp(-z * z) - 2.0 * z * std::exp(z * z)) / (2.0 * I); }};
}

// Non-solutions.
inline Fixture wrong_exponent() {
    return {"wrong_exponent", 2, 2, 1, "1", "1", "2*z", "exp(z)", false,
            [](C) { return C(1.0); }, [](C) { return C(1.0); }, [](C z) { return 2.0 * z; },
            [](C z) { return std::exp(z); }, [](C z) { return std::exp(z); }};
}

inline Fixture example1_perturbed() {
    Fixture fx = example1();
    fx.name = "example1_perturbed";
    fx.R = "2*(z^2+1)/(z+1)";
    fx.R_at = [](C z) { return 2.0 * (z * z + 1.0) / (z + 1.0); };
    fx.solves = false;
    return fx;
}

inline Fixture cosine_for_sine() {
    Fixture fx = sine();
    fx.name = "cosine_shifted";
    fx.Q = "2";
    fx.Q_at = [](C) { return C(2.0); };
    fx.solves = false;
    return fx;
}

inline std::vector<Fixture> all() {
    return {example1(),     example2(true),     example2(false), intro_example(),   sine(),
            t24e_example(), wrong_exponent(), example1_perturbed(), cosine_for_sine()};
}

}  // namespace fixtures
