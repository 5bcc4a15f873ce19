#include "liouville/poly.hpp"

#include <algorithm>
#include <map>

#include "liouville/errors.hpp"

namespace liouville {

Poly::Poly(const SurdSum& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::x() { return monomial(SurdSum(1), 1); }

Poly Poly::monomial(const SurdSum& coeff, int deg) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(deg + 1, SurdSum());
    p.c_[deg] = coeff;
    return p;
}

Poly Poly::from_coeffs(std::vector<SurdSum> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p(1);
    for (const Rational& r : roots) p *= (Poly::x() - Poly(r));
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const SurdSum& Poly::coeff(int i) const {
    static const SurdSum zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const SurdSum& Poly::leading() const {
    static const SurdSum zero;
    return c_.empty() ? zero : c_.back();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& ci : p.c_) ci = -ci;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly p;
    p.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    p.trim();
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, SurdSum());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            p.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    p.trim();
    return p;
}

Poly Poly::scaled(const SurdSum& k) const {
    if (k.is_zero()) return Poly();
    Poly p = *this;
    for (auto& ci : p.c_) ci *= k;
    return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw ZeroDenominator("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    SurdSum lead_inv = divisor.leading().inverse();
    std::vector<SurdSum> q(rem.degree() - divisor.degree() + 1, SurdSum());
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        SurdSum factor = rem.leading() * lead_inv;
        q[shift] = factor;
        for (int i = 0; i <= divisor.degree(); ++i) rem.c_[i + shift] -= factor * divisor.c_[i];
        rem.trim();
    }
    return {Poly::from_coeffs(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("polynomial division expected to be exact");
    return q;
}

Poly Poly::derivative() const {
    Poly p;
    if (degree() < 1) return p;
    p.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * SurdSum(static_cast<long>(i));
    p.trim();
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::pow(unsigned e) const {
    Poly out(1);
    Poly base = *this;
    for (; e; e >>= 1) {
        if (e & 1) out *= base;
        if (e > 1) base *= base;
    }
    return out;
}

Poly Poly::composed_shift(const Rational& h) const {
    Poly lin = Poly::x() - Poly(h);
    Poly out;
    for (int i = degree(); i >= 0; --i) out = out * lin + Poly(c_[i]);
    return out;
}

SurdSum Poly::eval(const SurdSum& x) const {
    SurdSum v;
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
    return v;
}

double Poly::eval_d(double x) const {
    double v = 0.0;
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i].to_double();
    return v;
}

bool Poly::all_rational_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const SurdSum& s) { return s.is_rational(); });
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = f.divmod(g).second;
        f = g;
        g = r.is_zero() ? r : r.monic();
    }
    return f.is_zero() ? f : f.monic();
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::optional<RootSplit> rational_roots(const Poly& p) {
    if (!p.all_rational_coeffs()) return std::nullopt;
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");

    std::vector<Rational> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = *p.coeff(i).as_rational();

    std::map<Rational, int> roots;

    // root at 0
    size_t low = 0;
    while (low < c.size() - 1 && c[low].is_zero()) ++low;
    if (low > 0) {
        roots[Rational(0)] = static_cast<int>(low);
        c.erase(c.begin(), c.begin() + low);
    }

    if (c.size() > 1) {
        // integer-scale: roots p/q with p | const term, q | leading term
        mpz_class scale = 1;
        for (const Rational& ci : c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), ci.denominator().get_mpz_t());
        std::vector<mpz_class> ic(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            Rational v = c[i] * Rational(scale, 1);
            ic[i] = v.numerator();
        }
        std::vector<Rational> candidates;
        for (const mpz_class& num : divisors_of(ic.front()))
            for (const mpz_class& den : divisors_of(ic.back()))
                for (int sign : {1, -1}) candidates.push_back(Rational(sign * num, den));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const Rational& cand : candidates) {
            for (;;) {
                if (c.size() < 2) break;
                Rational v(0);
                for (size_t i = c.size(); i-- > 0;) v = v * cand + c[i];
                if (!v.is_zero()) break;
                // synthetic division by (x - cand)
                std::vector<Rational> q(c.size() - 1);
                Rational carry = c.back();
                for (size_t i = c.size() - 1; i-- > 0;) {
                    q[i] = carry;
                    carry = c[i] + carry * cand;
                }
                c = std::move(q);
                ++roots[cand];
            }
        }
    }

    RootSplit out;
    for (const auto& [root, mult] : roots) out.roots.emplace_back(root, mult);
    std::vector<SurdSum> rescoef(c.size());
    for (size_t i = 0; i < c.size(); ++i) rescoef[i] = SurdSum(c[i]);
    out.residual = Poly::from_coeffs(std::move(rescoef));
    return out;
}

}  // namespace liouville
