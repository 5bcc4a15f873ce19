#include "liouville/series.hpp"

#include "liouville/errors.hpp"

namespace liouville {

Series series_of_poly(const Poly& p, std::size_t n) {
    Series s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = p.coeff(static_cast<int>(i));
    return s;
}

Series taylor_of_poly(const Poly& p, const Rational& x0, std::size_t n) {
    return series_of_poly(p.composed_shift(-x0), n);
}

Series series_add(const Series& a, const Series& b) {
    Series s(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i < a.size()) s[i] += a[i];
        if (i < b.size()) s[i] += b[i];
    }
    return s;
}

Series series_mul(const Series& a, const Series& b, std::size_t n) {
    Series s(n);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) s[i + j] += a[i] * b[j];
    }
    return s;
}

Series series_inverse(const Series& a, std::size_t n) {
    if (a.empty() || a[0].is_zero()) throw Error("series inverse needs a unit constant term");
    Series s(n);
    SurdSum c0_inv = a[0].inverse();
    s[0] = c0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        SurdSum acc;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * s[k - j];
        s[k] = -(acc * c0_inv);
    }
    return s;
}

Series series_derivative(const Series& a) {
    if (a.size() <= 1) return Series(a.size());
    Series s(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) s[i - 1] = a[i] * SurdSum(static_cast<long>(i));
    return s;
}

Series series_antiderivative(const Series& a, std::size_t n) {
    Series s(n);
    for (std::size_t i = 0; i + 1 < n && i < a.size(); ++i)
        s[i + 1] = a[i] / SurdSum(static_cast<long>(i + 1));
    return s;
}

Series series_exp(const Series& a, std::size_t n) {
    if (!a.empty() && !a[0].is_zero()) throw Error("series exp needs zero constant term");
    // g' = a' g, g0 = 1  =>  k g_k = sum_{j=1..k} j a_j g_{k-j}
    Series g(n);
    g[0] = SurdSum(1);
    for (std::size_t k = 1; k < n; ++k) {
        SurdSum acc;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            acc += a[j] * SurdSum(static_cast<long>(j)) * g[k - j];
        g[k] = acc / SurdSum(static_cast<long>(k));
    }
    return g;
}

}  // namespace liouville
