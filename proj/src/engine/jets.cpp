#include "jets.hpp"

#include <cmath>

#include "fermat/error.hpp"

namespace fermat::jets {

Series taylor(const CPoly& p, Complex z0, unsigned order) {
    Series c = p;
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) c[j] += z0 * c[j + 1];
    }
    c.resize(order + 1, Complex(0.0));
    return c;
}

Series mul(const Series& a, const Series& b) {
    Series c(a.size(), Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series div(const Series& a, const Series& b) {
    if (std::abs(b[0]) < 1e-12 * std::max(1.0, std::abs(a[0]))) throw PoleAtSamplePoint();
    Series c(a.size(), Complex(0.0));
    for (std::size_t n = 0; n < c.size(); ++n) {
        Complex s = a[n];
        for (std::size_t j = 1; j <= n; ++j) s -= b[j] * c[n - j];
        c[n] = s / b[0];
    }
    return c;
}

Series exp(const Series& a) {
    if (std::abs(a[0]) > 700.0) throw OverflowAtSamplePoint();
    Series e(a.size(), Complex(0.0));
    e[0] = std::exp(a[0]);
    // e' = a' e  =>  n e_n = sum_j j a_j e_{n-j}
    for (std::size_t n = 1; n < e.size(); ++n) {
        Complex s = 0.0;
        for (std::size_t j = 1; j <= n; ++j) s += static_cast<double>(j) * a[j] * e[n - j];
        e[n] = s / static_cast<double>(n);
    }
    return e;
}

Series of(const RatFun& r, Complex z0, unsigned order) {
    Series num = taylor(r.num().to_complex(), z0, order);
    if (r.is_polynomial()) return num;
    return div(num, taylor(r.den().to_complex(), z0, order));
}

}  // namespace fermat::jets
