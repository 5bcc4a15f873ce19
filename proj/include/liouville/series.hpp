#pragma once

#include <vector>

#include "liouville/poly.hpp"

namespace liouville {

// Truncated power series over the surd-sum field, coefficient i of t^i,
// always carried to a fixed length n (trailing zeros kept).
using Series = std::vector<SurdSum>;

Series series_of_poly(const Poly& p, std::size_t n);
// coefficients of p(x0 + t) up to t^{n-1}
Series taylor_of_poly(const Poly& p, const Rational& x0, std::size_t n);
Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b, std::size_t n);
// requires a[0] != 0
Series series_inverse(const Series& a, std::size_t n);
Series series_derivative(const Series& a);
// constant of integration 0
Series series_antiderivative(const Series& a, std::size_t n);
// requires a[0] == 0
Series series_exp(const Series& a, std::size_t n);

}  // namespace liouville
