#include "liouville/surd.hpp"

#include <cmath>
#include <set>

namespace liouville {

namespace {

// sqrt(a) * sqrt(b) = sign * scale * sqrt(rad) for square-free nonzero a, b.
// Derived from i*sqrt(|.|) semantics of negative radicands.
void radicand_mul(const mpz_class& a, const mpz_class& b, mpz_class& rad, mpz_class& scale, int& sign) {
    mpz_class aa = abs(a), bb = abs(b);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
    rad = (aa / g) * (bb / g);
    scale = g;
    sign = (a < 0 && b < 0) ? -1 : 1;
    if ((a < 0) != (b < 0)) rad = -rad;
}

// Exact elimination over Q; returns empty vector when the system is singular.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return {};
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational inv = m[col][col].inverse();
        for (size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& m) {
    s = 1;
    m = 1;
    mpz_class rem = n;
    for (mpz_class d = 2; d * d <= rem && d < 1000000; ++d) {
        if (rem % d != 0) continue;
        int e = 0;
        while (rem % d == 0) {
            rem /= d;
            ++e;
        }
        mpz_class half;
        mpz_pow_ui(half.get_mpz_t(), d.get_mpz_t(), e / 2);
        s *= half;
        if (e % 2) m *= d;
    }
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
            s *= root;
        } else {
            // remainder has no prime factor below 1e6 twice; treated as
            // square-free (consistent: the same value always splits the same way)
            m *= rem;
        }
    }
}

SurdSum::SurdSum(const Rational& q) {
    if (!q.is_zero()) terms_[1] = q;
}

void SurdSum::add_term(const Rational& coeff, const mpz_class& rad) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(rad);
    if (it == terms_.end()) {
        terms_[rad] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SurdSum SurdSum::term(const Rational& coeff, const mpz_class& radicand) {
    SurdSum out;
    if (coeff.is_zero() || radicand == 0) return out;
    mpz_class s, m;
    squarefree_split(abs(radicand), s, m);
    out.add_term(coeff * Rational(s, 1), radicand < 0 ? mpz_class(-m) : m);
    return out;
}

SurdSum SurdSum::sqrt_of(const Rational& q) {
    if (q.is_zero()) return SurdSum();
    mpz_class n = q.numerator() * q.denominator();
    mpz_class s, m;
    squarefree_split(abs(n), s, m);
    return term(Rational(s, q.denominator()), n < 0 ? mpz_class(-m) : m);
}

SurdSum SurdSum::sqrt() const {
    if (is_zero()) return SurdSum();
    if (auto q = as_rational()) return sqrt_of(*q);
    // try to denest a two-term value u + v*sqrt(d) as (p + q*sqrt(d))^2
    Rational u = rational_part();
    mpz_class d;
    Rational v;
    size_t surd_terms = 0;
    for (const auto& [rad, coeff] : terms_) {
        if (rad == 1) continue;
        ++surd_terms;
        d = rad;
        v = coeff;
    }
    if (surd_terms == 1) {
        SurdSum disc = sqrt_of(u * u - v * v * Rational(d, 1));
        if (auto s = disc.as_rational()) {
            for (int branch : {1, -1}) {
                Rational t = (u + Rational(branch) * *s) / Rational(2);
                SurdSum p_s = sqrt_of(t);
                if (auto p = p_s.as_rational()) {
                    if (p->is_zero()) continue;
                    SurdSum cand = SurdSum(*p) + term(v / (Rational(2) * *p), d);
                    if (cand * cand == *this) return cand;
                }
            }
        }
    }
    throw NonRationalRadicand();
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

bool SurdSum::is_real() const {
    for (const auto& [rad, coeff] : terms_)
        if (rad < 0) return false;
    return true;
}

std::optional<Rational> SurdSum::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
}

std::optional<mpz_class> SurdSum::as_integer() const {
    auto q = as_rational();
    if (!q || !q->is_integer()) return std::nullopt;
    return q->numerator();
}

const Rational& SurdSum::rational_part() const {
    static const Rational zero(0);
    auto it = terms_.find(mpz_class(1));
    return it == terms_.end() ? zero : it->second;
}

SurdSum SurdSum::operator-() const {
    SurdSum out;
    for (const auto& [rad, coeff] : terms_) out.terms_[rad] = -coeff;
    return out;
}

SurdSum operator+(const SurdSum& a, const SurdSum& b) {
    SurdSum out = a;
    for (const auto& [rad, coeff] : b.terms_) out.add_term(coeff, rad);
    return out;
}

SurdSum operator-(const SurdSum& a, const SurdSum& b) {
    SurdSum out = a;
    for (const auto& [rad, coeff] : b.terms_) out.add_term(-coeff, rad);
    return out;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    mpz_class rad, scale;
    int sign;
    for (const auto& [ra, ca] : a.terms_) {
        for (const auto& [rb, cb] : b.terms_) {
            radicand_mul(ra, rb, rad, scale, sign);
            out.add_term(ca * cb * Rational(sign * scale, 1), rad);
        }
    }
    return out;
}

SurdSum SurdSum::inverse() const {
    if (is_zero()) throw ZeroDenominator("division by zero surd sum");
    if (auto q = as_rational()) return SurdSum(q->inverse());

    // close the radicand set under products
    std::set<mpz_class> basis{1};
    for (const auto& [rad, coeff] : terms_) basis.insert(rad);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<mpz_class> cur(basis.begin(), basis.end());
        for (const auto& x : cur) {
            for (const auto& y : cur) {
                mpz_class rad, scale;
                int sign;
                radicand_mul(x, y, rad, scale, sign);
                if (basis.insert(rad).second) grew = true;
            }
        }
    }
    std::vector<mpz_class> idx(basis.begin(), basis.end());
    auto index_of = [&](const mpz_class& r) {
        return static_cast<size_t>(std::lower_bound(idx.begin(), idx.end(), r) - idx.begin());
    };

    const size_t n = idx.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        for (const auto& [ra, ca] : terms_) {
            mpz_class rad, scale;
            int sign;
            radicand_mul(ra, idx[j], rad, scale, sign);
            m[index_of(rad)][j] += ca * Rational(sign * scale, 1);
        }
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[index_of(1)] = Rational(1);
    std::vector<Rational> x = solve_rational(std::move(m), std::move(rhs));
    if (x.empty()) throw Error("surd inversion failed (singular basis matrix)");

    SurdSum out;
    for (size_t j = 0; j < n; ++j) out.add_term(x[j], idx[j]);
    return out;
}

SurdSum operator/(const SurdSum& a, const SurdSum& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero surd sum");
    if (auto q = b.as_rational()) {
        SurdSum out;
        Rational inv = q->inverse();
        for (const auto& [rad, coeff] : a.terms_) out.add_term(coeff * inv, rad);
        return out;
    }
    return a * b.inverse();
}

double SurdSum::to_double() const {
    double total = 0.0;
    for (const auto& [rad, coeff] : terms_) {
        if (rad < 0) throw Error("to_double on a non-real surd sum");
        total += coeff.to_double() * std::sqrt(rad.get_d());
    }
    return total;
}

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, coeff] : terms_) {
        Rational mag = coeff.abs();
        bool neg = coeff.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (rad == 1) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str() + "*";
            out += "sqrt(" + rad.get_str() + ")";
        }
    }
    return out;
}

}  // namespace liouville
