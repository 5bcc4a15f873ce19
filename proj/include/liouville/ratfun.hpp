#pragma once

#include "liouville/poly.hpp"
#include "liouville/series.hpp"

namespace liouville {

// Reduced rational function: gcd(num, den) = 1, den monic and nonzero;
// the zero function is 0/1. Canonical, so equality is componentwise.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long n) : num_(n), den_(1) {}             // NOLINT: implicit by design
    RatFun(const Rational& q) : num_(q), den_(1) {}  // NOLINT
    RatFun(const SurdSum& s) : num_(s), den_(1) {}   // NOLINT
    RatFun(const Poly& p) : num_(p), den_(1) {}      // NOLINT
    RatFun(Poly num, Poly den);

    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    RatFun derivative() const;
    RatFun pow(long e) const;
    // r(x - h)
    RatFun composed_shift(const Rational& h) const;
    // pole multiplicity of c in the denominator
    int pole_order(const Rational& c) const;
    // deg(den) - deg(num); the order of infinity as a zero of r
    int order_at_infinity() const;

    SurdSum eval(const SurdSum& x) const;
    double eval_d(double x) const;

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    Poly num_, den_;
};

// Spec-level constructor name: canonical coprime / monic-denominator form.
inline RatFun ratfun_reduce(const Poly& num, const Poly& den) { return RatFun(num, den); }

// Taylor expansion at a regular point (den(x0) != 0).
Series taylor_of_ratfun(const RatFun& r, const Rational& x0, std::size_t n);

}  // namespace liouville
