#include "liouville/laurent.hpp"

#include <algorithm>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::vector<std::pair<Rational, int>> rational_pole_set(const Poly& den) {
    auto split = rational_roots(den);
    if (!split) throw NonRationalPoles("denominator has non-rational coefficients");
    if (split->residual.degree() > 0)
        throw NonRationalPoles("denominator has non-rational roots (rootless factor of degree " +
                               std::to_string(split->residual.degree()) + ")");
    return split->roots;
}

// Laurent coefficients r_{-m+i}, i = 0..count-1, at a pole c of order m >= 0.
Series laurent_series_at(const RatFun& r, const Rational& c, int m, std::size_t count) {
    Poly rest = r.den();
    Poly lin = Poly::x() - Poly(c);
    for (int i = 0; i < m; ++i) rest = rest.div_exact(lin);
    Series num = taylor_of_poly(r.num(), c, count);
    Series den = taylor_of_poly(rest, c, count);
    return series_mul(num, series_inverse(den, count), count);
}

// Coefficients R_top, R_{top-1}, ... of the expansion r = sum_{j<=top} R_j x^j.
Series infinity_series(const RatFun& r, std::size_t count) {
    auto reversed = [](const Poly& p) {
        std::vector<SurdSum> c(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(p.degree() - i);
        return Poly::from_coeffs(std::move(c));
    };
    Series num = series_of_poly(reversed(r.num()), count);
    Series den = series_of_poly(reversed(r.den()), count);
    return series_mul(num, series_inverse(den, count), count);
}

}  // namespace

PoleSpectrum pole_spectrum(const RatFun& r) {
    if (r.is_zero()) throw Error("pole spectrum of the zero function");
    PoleSpectrum out;
    out.finite_poles = rational_pole_set(r.den());
    out.order_at_infinity = r.order_at_infinity();
    return out;
}

PartialFractions partial_fractions(const RatFun& r) {
    PartialFractions out;
    if (r.is_zero()) return out;
    auto [quot, rem] = r.num().divmod(r.den());
    out.polynomial_part = quot;
    if (rem.is_zero()) return out;

    RatFun proper(rem, r.den());
    for (const auto& [pole, mult] : rational_pole_set(proper.den())) {
        Series h = laurent_series_at(proper, pole, mult, mult);
        for (int j = 0; j < mult; ++j) {
            if (h[j].is_zero()) continue;
            out.terms.push_back({pole, mult - j, h[j]});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.pole != b.pole) return a.pole < b.pole;
        return a.exponent < b.exponent;
    });
    return out;
}

RatFun reassemble(const PartialFractions& pf) {
    RatFun acc(pf.polynomial_part);
    for (const auto& t : pf.terms) {
        RatFun lin = RatFun(Poly::x() - Poly(t.pole)).pow(t.exponent);
        acc += RatFun(t.coeff) / lin;
    }
    return acc;
}

SurdSum laurent_coeff_at_pole(const RatFun& r, const Rational& c, int e) {
    if (r.is_zero()) return SurdSum();
    int m = r.pole_order(c);
    if (e < -m) return SurdSum();
    std::size_t count = static_cast<std::size_t>(e + m + 1);
    return laurent_series_at(r, c, m, count)[count - 1];
}

SurdSum coeff_at_infinity(const RatFun& r, int e) {
    if (r.is_zero()) return SurdSum();
    int top = -r.order_at_infinity();
    if (e > top) return SurdSum();
    std::size_t count = static_cast<std::size_t>(top - e + 1);
    return infinity_series(r, count)[count - 1];
}

SqrtAtPole laurent_sqrt_at_pole(const RatFun& r, const Rational& c, int v) {
    int m = r.pole_order(c);
    if (m % 2 != 0 && m >= 3)
        throw OddPoleOrder("pole of odd order " + std::to_string(m) + " has no Laurent square root");
    if (m != 2 * v || v < 2)
        throw Error("laurent_sqrt_at_pole expects pole order 2v >= 4, got order " + std::to_string(m));

    Series L = laurent_series_at(r, c, m, v);  // r_{-2v} .. r_{-(v+1)}
    std::vector<SurdSum> s(v - 1);             // s[p] = coeff of (x-c)^{-(v-p)}
    s[0] = L[0].sqrt();
    SurdSum two_a = SurdSum(2) * s[0];
    for (int i = 1; i <= v - 2; ++i) {
        SurdSum inner;
        for (int p = 1; p < i; ++p) inner += s[p] * s[i - p];
        s[i] = (L[i] - inner) / two_a;
    }
    SurdSum cross;
    for (int p = 1; p <= v - 2; ++p) {
        int q = v - 1 - p;
        if (q >= 0 && q <= v - 2) cross += s[p] * s[q];
    }

    SqrtAtPole out;
    out.v = v;
    out.a = s[0];
    out.b_next = L[v - 1] - cross;
    Poly lin = Poly::x() - Poly(c);
    RatFun principal;
    for (int p = 0; p <= v - 2; ++p) principal += RatFun(Poly(s[p])) / RatFun(lin).pow(v - p);
    out.principal = principal;
    return out;
}

SqrtAtInfinity laurent_sqrt_at_infinity(const RatFun& r, int v) {
    int order = r.order_at_infinity();
    if (order % 2 != 0)
        throw OddInfinityOrder("infinity order " + std::to_string(order) + " is odd");
    if (order != -2 * v || v < 0)
        throw Error("laurent_sqrt_at_infinity expects order(r_inf) = -2v <= 0, got " + std::to_string(order));

    Series R = infinity_series(r, v + 2);  // R_{2v} .. R_{v-1}
    std::vector<SurdSum> s(v + 1);         // s[p] = coeff of x^{v-p}
    s[0] = R[0].sqrt();
    SurdSum two_a = SurdSum(2) * s[0];
    for (int i = 1; i <= v; ++i) {
        SurdSum inner;
        for (int p = 1; p < i; ++p) inner += s[p] * s[i - p];
        s[i] = (R[i] - inner) / two_a;
    }
    SurdSum cross;
    for (int p = 1; p <= v; ++p) {
        int q = v + 1 - p;
        if (q >= 0 && q <= v) cross += s[p] * s[q];
    }

    SqrtAtInfinity out;
    out.v = v;
    out.a = s[0];
    out.b_next = R[v + 1] - cross;
    std::vector<SurdSum> coeffs(v + 1);
    for (int p = 0; p <= v; ++p) coeffs[v - p] = s[p];
    out.principal = Poly::from_coeffs(std::move(coeffs));
    return out;
}

}  // namespace liouville
