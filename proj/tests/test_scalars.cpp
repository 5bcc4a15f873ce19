#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouville/surd.hpp"
#include "testutil.hpp"

using namespace liouville;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational(-7).str() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(Rational::from_string("a/2"), Error);
    CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
}

TEST_CASE("rational arithmetic and order") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(a.pow(-2) == Rational(4));
    CHECK(b < a);
    CHECK_THROWS_AS(a / Rational(0), ZeroDenominator);
}

TEST_CASE("surd canonicalization") {
    // sqrt(12) = 2 sqrt(3)
    SurdSum s = SurdSum::term(Rational(1), mpz_class(12));
    CHECK(s == SurdSum::term(Rational(2), mpz_class(3)));
    // sqrt(9/4) = 3/2
    CHECK(SurdSum::sqrt_of(Rational(9, 4)) == SurdSum(Rational(3, 2)));
    // sqrt(8/3) = (2/3) sqrt(6)
    CHECK(SurdSum::sqrt_of(Rational(8, 3)) == SurdSum::term(Rational(2, 3), mpz_class(6)));
    CHECK(SurdSum::sqrt_of(Rational(0)).is_zero());
}

TEST_CASE("surd squares reproduce radicands") {
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, -1L, -2L, -3L}) {
        SurdSum s = SurdSum::term(Rational(1), mpz_class(d));
        CHECK(s * s == SurdSum(Rational(d)));
    }
}

TEST_CASE("surd ring laws on random inputs") {
    testutil::Rng rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        SurdSum a = rng.surd(), b = rng.surd(), c = rng.surd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("surd inversion: x * (1/x) = 1") {
    testutil::Rng rng(7);
    int checked = 0;
    for (int iter = 0; iter < 100; ++iter) {
        SurdSum x = rng.surd();
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == SurdSum(1));
        ++checked;
    }
    CHECK(checked > 90);
    // multi-radicand value
    SurdSum x = SurdSum(Rational(1, 2)) + SurdSum::term(Rational(3), mpz_class(2)) +
                SurdSum::term(Rational(-2, 5), mpz_class(3));
    CHECK(x * x.inverse() == SurdSum(1));
    // imaginary radicand
    SurdSum z = SurdSum(1) + SurdSum::term(Rational(1), mpz_class(-1));
    CHECK(z * z.inverse() == SurdSum(1));
    CHECK_THROWS_AS(SurdSum().inverse(), ZeroDenominator);
}

TEST_CASE("surd sqrt of paper values") {
    // alpha(+-) = (1 +- sqrt(1+4b))/2 with b = -3/16 gives 3/4, 1/4
    SurdSum b(Rational(-3, 16));
    SurdSum s = (SurdSum(1) + SurdSum(4) * b).sqrt();
    CHECK(s == SurdSum(Rational(1, 2)));
    SurdSum half(Rational(1, 2));
    CHECK((SurdSum(1) + s) * half == SurdSum(Rational(3, 4)));
    CHECK((SurdSum(1) - s) * half == SurdSum(Rational(1, 4)));
    // b = 3/4 gives sqrt(4) = 2 and alphas 3/2, -1/2
    SurdSum s2 = (SurdSum(1) + SurdSum(3)).sqrt();
    CHECK(s2 == SurdSum(2));
}

TEST_CASE("surd sqrt denesting and failure") {
    // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    SurdSum v = SurdSum(3) + SurdSum::term(Rational(2), mpz_class(2));
    SurdSum r = v.sqrt();
    CHECK(r * r == v);
    CHECK_THROWS_AS((SurdSum(1) + SurdSum::term(Rational(1), mpz_class(5))).sqrt(), NonRationalRadicand);
    // negative rational: imaginary radicand
    SurdSum i = SurdSum::sqrt_of(Rational(-4));
    CHECK(i == SurdSum::term(Rational(2), mpz_class(-1)));
    CHECK(i * i == SurdSum(Rational(-4)));
}

TEST_CASE("surd integer detection") {
    SurdSum s = SurdSum::term(Rational(1), mpz_class(2));
    CHECK((s - s + SurdSum(3)).as_integer().has_value());
    CHECK(*(SurdSum(3)).as_integer() == 3);
    CHECK(!(s + SurdSum(1)).as_integer().has_value());
    CHECK(!SurdSum(Rational(1, 2)).as_integer().has_value());
    CHECK(*SurdSum().as_integer() == 0);
}

TEST_CASE("surd real/imaginary bookkeeping") {
    SurdSum real = SurdSum(1) + SurdSum::term(Rational(1), mpz_class(2));
    CHECK(real.is_real());
    CHECK(real.to_double() == doctest::Approx(1.0 + std::sqrt(2.0)));
    SurdSum imag = SurdSum::term(Rational(1), mpz_class(-3));
    CHECK(!imag.is_real());
    CHECK_THROWS_AS(imag.to_double(), Error);
}

TEST_CASE("surd rendering") {
    SurdSum v = SurdSum(Rational(3, 4)) - SurdSum::term(Rational(1, 2), mpz_class(5));
    CHECK(v.str() == "3/4 - 1/2*sqrt(5)");
    CHECK(SurdSum().str() == "0");
    CHECK(SurdSum::term(Rational(1), mpz_class(-3)).str() == "sqrt(-3)");
}
