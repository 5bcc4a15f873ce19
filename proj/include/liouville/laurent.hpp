#pragma once

#include "liouville/ratfun.hpp"

namespace liouville {

// Exact pole data of a reduced rational function with rational poles.
struct PoleSpectrum {
    std::vector<std::pair<Rational, int>> finite_poles;  // sorted by location
    int order_at_infinity = 0;                           // deg(den) - deg(num)
};
PoleSpectrum pole_spectrum(const RatFun& r);

struct PartialFractionTerm {
    Rational pole;
    int exponent;  // k >= 1 in coeff/(x - pole)^k
    SurdSum coeff;
};
struct PartialFractions {
    Poly polynomial_part;
    std::vector<PartialFractionTerm> terms;  // sorted by (pole, exponent), zero coeffs dropped
};
PartialFractions partial_fractions(const RatFun& r);
RatFun reassemble(const PartialFractions& pf);

// Coefficient of (x - c)^e in the Laurent expansion at c.
SurdSum laurent_coeff_at_pole(const RatFun& r, const Rational& c, int e);
// Coefficient of x^e in the expansion at infinity.
SurdSum coeff_at_infinity(const RatFun& r, int e);

// [sqrt(r)]_c = a (x-c)^-v + ... + d (x-c)^-2 with
// r - [sqrt(r)]_c^2 = b_next (x-c)^-(v+1) + O((x-c)^-v); pole order 2v >= 4.
struct SqrtAtPole {
    int v;
    SurdSum a;
    SurdSum b_next;
    RatFun principal;
};
SqrtAtPole laurent_sqrt_at_pole(const RatFun& r, const Rational& c, int v);

// [sqrt(r)]_inf = a x^v + ... + d with
// r - [sqrt(r)]_inf^2 = b_next x^{v-1} + O(x^{v-2}); order at infinity -2v <= 0.
struct SqrtAtInfinity {
    int v;
    SurdSum a;
    SurdSum b_next;
    Poly principal;
};
SqrtAtInfinity laurent_sqrt_at_infinity(const RatFun& r, int v);

}  // namespace liouville
