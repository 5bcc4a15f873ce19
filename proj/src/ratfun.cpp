#include "liouville/ratfun.hpp"

#include "liouville/errors.hpp"

namespace liouville {

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
    SurdSum lead_inv = den.leading().inverse();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return RatFun(1);
    if (e < 0) return RatFun(den_, num_).pow(-e);
    return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun RatFun::composed_shift(const Rational& h) const {
    return RatFun(num_.composed_shift(h), den_.composed_shift(h));
}

int RatFun::pole_order(const Rational& c) const {
    int order = 0;
    Poly d = den_;
    Poly lin = Poly::x() - Poly(c);
    for (;;) {
        auto [q, r] = d.divmod(lin);
        if (!r.is_zero()) break;
        ++order;
        d = q;
    }
    return order;
}

int RatFun::order_at_infinity() const {
    if (is_zero()) throw Error("order at infinity of the zero function");
    return den_.degree() - num_.degree();
}

SurdSum RatFun::eval(const SurdSum& x) const {
    SurdSum d = den_.eval(x);
    if (d.is_zero()) throw ZeroDenominator("evaluation at a pole");
    return num_.eval(x) / d;
}

double RatFun::eval_d(double x) const { return num_.eval_d(x) / den_.eval_d(x); }

Series taylor_of_ratfun(const RatFun& r, const Rational& x0, std::size_t n) {
    Series den = taylor_of_poly(r.den(), x0, n);
    if (den.empty() || den[0].is_zero()) throw Error("taylor expansion at a pole");
    return series_mul(taylor_of_poly(r.num(), x0, n), series_inverse(den, n), n);
}

}  // namespace liouville
