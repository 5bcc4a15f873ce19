#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liouville/surd.hpp"

namespace liouville {

// Dense univariate polynomial over the surd-sum field. Coefficient i is the
// coefficient of x^i; the leading coefficient is nonzero and the zero
// polynomial is the empty sequence with degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(long n) : Poly(SurdSum(n)) {}            // NOLINT: implicit by design
    Poly(const Rational& q) : Poly(SurdSum(q)) {}  // NOLINT
    Poly(const SurdSum& constant);                 // NOLINT

    static Poly x();
    static Poly monomial(const SurdSum& coeff, int deg);
    static Poly from_coeffs(std::vector<SurdSum> coeffs);
    // (x - c1)(x - c2)...
    static Poly from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const SurdSum& coeff(int i) const;
    const SurdSum& leading() const;
    const std::vector<SurdSum>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const SurdSum& k) const;

    // Euclidean division; remainder has degree < degree(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // Division known to be exact; throws Error when a remainder survives.
    Poly div_exact(const Poly& divisor) const;

    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;
    // p(x - h)
    Poly composed_shift(const Rational& h) const;
    SurdSum eval(const SurdSum& x) const;
    double eval_d(double x) const;

    bool all_rational_coeffs() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<SurdSum> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

// Rational roots of p with multiplicities (sorted ascending) plus the
// rootless residual factor. nullopt when p has non-rational coefficients.
struct RootSplit {
    std::vector<std::pair<Rational, int>> roots;
    Poly residual;
};
std::optional<RootSplit> rational_roots(const Poly& p);

}  // namespace liouville
