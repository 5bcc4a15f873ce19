#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

// Formal finite sum  q_1*sqrt(d_1) + ... + q_k*sqrt(d_k)  with rational
// coefficients and square-free nonzero integer radicands. Radicand 1 is the
// rational part; a negative radicand d stands for i*sqrt(|d|), so the tower
// is closed under square roots of arbitrary rationals. Values are immutable
// elements of a field; no zero coefficients are stored.
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(long n) { *this = SurdSum(Rational(n)); }  // NOLINT: implicit by design
    SurdSum(const Rational& q);                        // NOLINT: implicit by design

    // coeff * sqrt(radicand); the radicand need not be square-free, its
    // square part is folded into the coefficient. radicand = 0 gives zero.
    static SurdSum term(const Rational& coeff, const mpz_class& radicand);

    // Exact square root of a rational (negative values land on negative
    // radicands, i.e. pure imaginary results).
    static SurdSum sqrt_of(const Rational& q);

    // Square root of this sum when it is rational, or a perfect square of
    // the two-term form u + v*sqrt(d); otherwise throws NonRationalRadicand.
    SurdSum sqrt() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_real() const;
    std::optional<Rational> as_rational() const;
    std::optional<mpz_class> as_integer() const;
    const Rational& rational_part() const;

    SurdSum operator-() const;
    friend SurdSum operator+(const SurdSum& a, const SurdSum& b);
    friend SurdSum operator-(const SurdSum& a, const SurdSum& b);
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
    friend SurdSum operator/(const SurdSum& a, const SurdSum& b);
    SurdSum& operator+=(const SurdSum& o) { *this = *this + o; return *this; }
    SurdSum& operator-=(const SurdSum& o) { *this = *this - o; return *this; }
    SurdSum& operator*=(const SurdSum& o) { *this = *this * o; return *this; }
    SurdSum& operator/=(const SurdSum& o) { *this = *this / o; return *this; }

    // Multiplicative inverse via a linear solve over the Q-basis spanned by
    // the radicand group this value generates. Throws on zero.
    SurdSum inverse() const;

    friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SurdSum& a, const SurdSum& b) { return !(a == b); }

    // Real values only (no negative radicands).
    double to_double() const;
    std::string str() const;

    const std::map<mpz_class, Rational>& terms() const { return terms_; }

private:
    void add_term(const Rational& coeff, const mpz_class& squarefree_radicand);
    std::map<mpz_class, Rational> terms_;
};

// n = s^2 * m with m square-free; requires n > 0.
void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& m);

}  // namespace liouville
