#include "liouville/rational.hpp"

#include <cctype>

namespace liouville {

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator();
    q_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw Error("empty rational literal");
    // validate shape before handing to GMP: sign? digits ( '/' sign? digits )?
    auto is_digits = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string t(text);
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        if (!is_digits(t)) throw Error("invalid rational literal '" + t + "'");
        return Rational(mpq_class(mpz_class(t), 1));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw Error("invalid rational literal '" + t + "'");
    mpz_class d(den);
    if (d == 0) throw ZeroDenominator("rational literal with zero denominator: '" + t + "'");
    return Rational(mpz_class(num), d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominator("division by zero rational");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), q_.get_mpq_t());
    return Rational(inv);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), n);
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

}  // namespace liouville
