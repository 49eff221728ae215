#include <algorithm>
#include <cmath>

#include "fermat/classify.hpp"
#include "fermat/error.hpp"

namespace fermat {

std::vector<Complex> kth_roots(Complex w, unsigned k) {
    if (k == 0) throw PreconditionViolated("root order must be positive");
    if (std::abs(w) == 0.0) throw ZeroBase();
    double r = std::pow(std::abs(w), 1.0 / k);
    double theta = std::arg(w);
    std::vector<Complex> roots;
    roots.reserve(k);
    for (unsigned j = 0; j < k; ++j) {
        Complex x = std::polar(r, (theta + 2.0 * M_PI * j) / k);
        // one Newton step on x^k - w
        Complex xk1 = std::pow(x, static_cast<int>(k) - 1);
        x -= (xk1 * x - w) / (static_cast<double>(k) * xk1);
        if (std::abs(x.imag()) < 1e-15 * r) x.imag(0.0);
        if (std::abs(x.real()) < 1e-15 * r) x.real(0.0);
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    return roots;
}

std::vector<Constant> kth_roots(const GaussianRational& w, unsigned k) {
    if (w.is_zero()) throw ZeroBase();
    Poly constraint = Poly::monomial(1, k) - Poly(w);
    std::vector<Constant> out;
    for (Complex x : kth_roots(w.to_complex(), k)) {
        if (auto exact = recover_exact(x, constraint)) {
            out.emplace_back(*exact);
        } else {
            out.push_back(Constant::numeric(x));
        }
    }
    return out;
}

}  // namespace fermat
