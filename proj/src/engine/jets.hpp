#pragma once

// Truncated power series in h = z - z0, used to evaluate derivatives of
// numeric candidates without going through the symbolic derivative.

#include <vector>

#include "fermat/algebra.hpp"
#include "fermat/numeric.hpp"

namespace fermat::jets {

using Series = std::vector<Complex>;

/// Coefficients of p(z0 + h), truncated after h^order.
Series taylor(const CPoly& p, Complex z0, unsigned order);
Series mul(const Series& a, const Series& b);
/// Throws PoleAtSamplePoint when b(0) is negligible against a(0).
Series div(const Series& a, const Series& b);
/// Throws OverflowAtSamplePoint when |a(0)| > 700.
Series exp(const Series& a);

Series of(const RatFun& r, Complex z0, unsigned order);

}  // namespace fermat::jets
