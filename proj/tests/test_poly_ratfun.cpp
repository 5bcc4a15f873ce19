#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouville/laurent.hpp"
#include "testutil.hpp"

using namespace liouville;

namespace {

Poly from_longs(std::initializer_list<long> ascending) {
    std::vector<SurdSum> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly::from_coeffs(std::move(c));
}

// reduced variational coefficient at lambda = omega_2^2 = 1:
// r = (3x^3 - 13x^2 + 11x + 3) / (4 x^2 (x-1) (x-2)^2)
RatFun paper_r_11() {
    Poly num = from_longs({3, 11, -13, 3});
    Poly den = Poly::from_roots({0, 0, 1, 2, 2}).scaled(SurdSum(4));
    return RatFun(num, den);
}

}  // namespace

TEST_CASE("poly basics") {
    Poly p = from_longs({1, 2, 1});  // (x+1)^2
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == -1);
    CHECK(Poly().is_zero());
    CHECK(p.eval(SurdSum(2)) == SurdSum(9));
    CHECK(p.derivative() == from_longs({2, 2}));
    CHECK(Poly::from_roots({-1, -1}) == p);
}

TEST_CASE("poly division and gcd") {
    Poly a = from_longs({-1, 0, 1});  // x^2 - 1
    Poly b = from_longs({-1, 1});     // x - 1
    auto [q, r] = a.divmod(b);
    CHECK(q == from_longs({1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == b.monic());
    CHECK(gcd(a, from_longs({1, 1})) == from_longs({1, 1}));
    CHECK_THROWS_AS(a.divmod(Poly()), ZeroDenominator);

    testutil::Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        Poly f = rng.poly(4), g = rng.nonzero_poly(3);
        auto [quot, rem] = f.divmod(g);
        CHECK(quot * g + rem == f);
        CHECK(rem.degree() < g.degree());
    }
}

TEST_CASE("poly shift composition") {
    Poly p = from_longs({0, 0, 1});  // x^2
    CHECK(p.composed_shift(Rational(1)) == from_longs({1, -2, 1}));
    testutil::Rng rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        Poly f = rng.poly(5);
        Rational h = rng.rational(4, 3);
        CHECK(f.composed_shift(h).composed_shift(-h) == f);
    }
}

TEST_CASE("rational roots") {
    // (x-1)^2 (x+2) (2x-1)
    Poly p = Poly::from_roots({1, 1, -2, Rational(1, 2)}).scaled(SurdSum(2));
    auto split = rational_roots(p);
    REQUIRE(split.has_value());
    REQUIRE(split->roots.size() == 3);
    CHECK(split->roots[0] == std::pair<Rational, int>(Rational(-2), 1));
    CHECK(split->roots[1] == std::pair<Rational, int>(Rational(1, 2), 1));
    CHECK(split->roots[2] == std::pair<Rational, int>(Rational(1), 2));
    CHECK(split->residual.degree() == 0);

    // x^2 + 1 has no rational roots
    auto irr = rational_roots(from_longs({1, 0, 1}));
    REQUIRE(irr.has_value());
    CHECK(irr->roots.empty());
    CHECK(irr->residual.degree() == 2);

    // surd coefficients: not a rational polynomial
    Poly surd_poly = Poly::from_coeffs({SurdSum::term(Rational(1), mpz_class(2)), SurdSum(1)});
    CHECK(!rational_roots(surd_poly).has_value());
}

TEST_CASE("ratfun reduction is canonical") {
    // (x^2 - 1, x - 1) -> (x + 1, 1)
    RatFun r(from_longs({-1, 0, 1}), from_longs({-1, 1}));
    CHECK(r.is_poly());
    CHECK(r.num() == from_longs({1, 1}));
    // (0, x^3) -> (0, 1)
    RatFun z(Poly(), from_longs({0, 0, 0, 1}));
    CHECK(z.is_zero());
    CHECK(z.den() == Poly(1));
    CHECK_THROWS_AS(RatFun(Poly(1), Poly()), ZeroDenominator);

    // reduce(p g, q g) = reduce(p, q)
    testutil::Rng rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        Poly p = rng.poly(3), q = rng.nonzero_poly(3), g = rng.nonzero_poly(2);
        CHECK(RatFun(p * g, q * g) == RatFun(p, q));
    }
}

TEST_CASE("ratfun arithmetic") {
    RatFun x = RatFun::x();
    RatFun r = RatFun(1) / x + x;  // (x^2 + 1)/x
    CHECK(r.num() == from_longs({1, 0, 1}));
    CHECK(r.den() == from_longs({0, 1}));
    CHECK(r.derivative() == (RatFun(1) - RatFun(1) / (x * x)));
    CHECK(r.pow(-1) == RatFun(from_longs({0, 1}), from_longs({1, 0, 1})));
    CHECK(r.eval(SurdSum(2)) == SurdSum(Rational(5, 2)));
    CHECK_THROWS_AS(r.eval(SurdSum(0)), ZeroDenominator);
}

TEST_CASE("pole spectrum of the paper r") {
    PoleSpectrum spec = pole_spectrum(paper_r_11());
    REQUIRE(spec.finite_poles.size() == 3);
    CHECK(spec.finite_poles[0] == std::pair<Rational, int>(Rational(0), 2));
    CHECK(spec.finite_poles[1] == std::pair<Rational, int>(Rational(1), 1));
    CHECK(spec.finite_poles[2] == std::pair<Rational, int>(Rational(2), 2));
    CHECK(spec.order_at_infinity == 2);
}

TEST_CASE("pole spectrum edge cases") {
    PoleSpectrum one = pole_spectrum(RatFun(1));
    CHECK(one.finite_poles.empty());
    CHECK(one.order_at_infinity == 0);
    RatFun irr(Poly(1), from_longs({1, 0, 1}));
    CHECK_THROWS_AS(pole_spectrum(irr), NonRationalPoles);
}

TEST_CASE("pole orders sum to the denominator degree") {
    testutil::Rng rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Rational> roots;
        long k = rng.uniform(1, 3);
        for (long i = 0; i < k; ++i) roots.push_back(Rational(rng.uniform(-2, 2)));
        Poly den = Poly::from_roots(roots);
        Poly num = rng.nonzero_poly(2);
        RatFun r(num, den);
        if (r.is_poly()) continue;
        PoleSpectrum spec = pole_spectrum(r);
        int total = 0;
        for (const auto& [c, order] : spec.finite_poles) total += order;
        CHECK(total == r.den().degree());
        CHECK(spec.order_at_infinity == r.den().degree() - r.num().degree());
    }
}

TEST_CASE("partial fractions of the paper r") {
    PartialFractions pf = partial_fractions(paper_r_11());
    CHECK(pf.polynomial_part.is_zero());
    REQUIRE(pf.terms.size() == 5);
    // sorted by (pole, exponent): -17/(16x) - 3/(16x^2) + 1/(x-1) + 1/(16(x-2)) - 3/(16(x-2)^2)
    CHECK(pf.terms[0].pole == Rational(0));
    CHECK(pf.terms[0].exponent == 1);
    CHECK(pf.terms[0].coeff == SurdSum(Rational(-17, 16)));
    CHECK(pf.terms[1].exponent == 2);
    CHECK(pf.terms[1].coeff == SurdSum(Rational(-3, 16)));
    CHECK(pf.terms[2].pole == Rational(1));
    CHECK(pf.terms[2].coeff == SurdSum(1));
    CHECK(pf.terms[3].pole == Rational(2));
    CHECK(pf.terms[3].exponent == 1);
    CHECK(pf.terms[3].coeff == SurdSum(Rational(1, 16)));
    CHECK(pf.terms[4].exponent == 2);
    CHECK(pf.terms[4].coeff == SurdSum(Rational(-3, 16)));
    CHECK(reassemble(pf) == paper_r_11());
}

TEST_CASE("partial fractions of simple functions") {
    // 1/(x(x-1)) = -1/x + 1/(x-1)
    RatFun r(Poly(1), Poly::from_roots({0, 1}));
    PartialFractions pf = partial_fractions(r);
    CHECK(pf.polynomial_part.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].coeff == SurdSum(-1));
    CHECK(pf.terms[1].coeff == SurdSum(1));

    // x + 1/x^2: polynomial part x, term (0, 2, 1)
    RatFun r2 = RatFun::x() + RatFun(Poly(1), from_longs({0, 0, 1}));
    PartialFractions pf2 = partial_fractions(r2);
    CHECK(pf2.polynomial_part == from_longs({0, 1}));
    REQUIRE(pf2.terms.size() == 1);
    CHECK(pf2.terms[0].pole == Rational(0));
    CHECK(pf2.terms[0].exponent == 2);
    CHECK(pf2.terms[0].coeff == SurdSum(1));
}

TEST_CASE("partial fraction reconstruction on random inputs") {
    testutil::Rng rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Rational> roots;
        long k = rng.uniform(1, 4);
        for (long i = 0; i < k; ++i) roots.push_back(Rational(rng.uniform(-2, 2)));
        Poly den = Poly::from_roots(roots);
        Poly num = rng.nonzero_poly(4);
        RatFun r(num, den);
        CHECK(reassemble(partial_fractions(r)) == r);
    }
}

TEST_CASE("partial fractions with surd coefficients") {
    // numerator sqrt(2) x + 3 over x^2 (x - 1)
    Poly num = Poly::from_coeffs({SurdSum(3), SurdSum::term(Rational(1), mpz_class(2))});
    RatFun r(num, Poly::from_roots({0, 0, 1}));
    PartialFractions pf = partial_fractions(r);
    CHECK(reassemble(pf) == r);
    // residue at 1 is num(1)/1 = 3 + sqrt(2)
    bool found = false;
    for (const auto& t : pf.terms)
        if (t.pole == Rational(1) && t.exponent == 1) {
            found = true;
            CHECK(t.coeff == SurdSum(3) + SurdSum::term(Rational(1), mpz_class(2)));
        }
    CHECK(found);
}

TEST_CASE("laurent coefficients") {
    RatFun r = paper_r_11();
    // x^-2 coefficients at 0 and 2 are both -3/16
    CHECK(laurent_coeff_at_pole(r, Rational(0), -2) == SurdSum(Rational(-3, 16)));
    CHECK(laurent_coeff_at_pole(r, Rational(2), -2) == SurdSum(Rational(-3, 16)));
    CHECK(laurent_coeff_at_pole(r, Rational(1), -1) == SurdSum(1));
    // r ~ (3/4) x^-2 at infinity
    CHECK(coeff_at_infinity(r, -2) == SurdSum(Rational(3, 4)));
    CHECK(coeff_at_infinity(r, -1).is_zero());
}

TEST_CASE("laurent sqrt at a pole") {
    // r = 1/x^4: principal part x^-2, a = 1, b_next = 0
    RatFun r1(Poly(1), from_longs({0, 0, 0, 0, 1}));
    SqrtAtPole s1 = laurent_sqrt_at_pole(r1, Rational(0), 2);
    CHECK(s1.a == SurdSum(1));
    CHECK(s1.b_next.is_zero());
    CHECK(s1.principal == RatFun(Poly(1), from_longs({0, 0, 1})));

    // r = 1/x^4 + 1/x^3: a = 1, b_next = 1
    RatFun r2 = r1 + RatFun(Poly(1), from_longs({0, 0, 0, 1}));
    SqrtAtPole s2 = laurent_sqrt_at_pole(r2, Rational(0), 2);
    CHECK(s2.a == SurdSum(1));
    CHECK(s2.b_next == SurdSum(1));

    // r = 4/x^6 with v = 3: principal 2x^-3, b_next = 0
    RatFun r3(Poly(4), from_longs({0, 0, 0, 0, 0, 0, 1}));
    SqrtAtPole s3 = laurent_sqrt_at_pole(r3, Rational(0), 3);
    CHECK(s3.a == SurdSum(2));
    CHECK(s3.b_next.is_zero());
    CHECK(s3.principal == RatFun(Poly(2), from_longs({0, 0, 0, 1})));

    // odd pole order is a case-1 condition failure
    RatFun odd(Poly(1), from_longs({0, 0, 0, 1}));
    CHECK_THROWS_AS(laurent_sqrt_at_pole(odd, Rational(0), 2), OddPoleOrder);
}

TEST_CASE("laurent sqrt recovers a planted principal part") {
    testutil::Rng rng(53);
    for (int iter = 0; iter < 25; ++iter) {
        int v = static_cast<int>(rng.uniform(2, 4));
        // q = sum_{i=0}^{v-2} c_i x^{-(v-i)} with c_0 != 0, planted as r = q^2 + e x^{-(v+1)}
        RatFun q(Poly(rng.nonzero_rational(5)), Poly::monomial(SurdSum(1), v));
        for (int i = 1; i <= v - 2; ++i)
            q += RatFun(Poly(rng.rational(5)), Poly::monomial(SurdSum(1), v - i));
        Rational e = rng.rational(5);
        RatFun r = q * q + RatFun(Poly(e), Poly::monomial(SurdSum(1), v + 1));
        SqrtAtPole sq = laurent_sqrt_at_pole(r, Rational(0), v);
        bool matches = sq.principal == q || sq.principal == -q;
        CHECK(matches);
        CHECK(sq.b_next == SurdSum(e));
    }
}

TEST_CASE("laurent sqrt at infinity") {
    // r = x^2: part x, a = 1, b_next = 0
    RatFun r1(from_longs({0, 0, 1}), Poly(1));
    SqrtAtInfinity s1 = laurent_sqrt_at_infinity(r1, 1);
    CHECK(s1.a == SurdSum(1));
    CHECK(s1.b_next.is_zero());
    CHECK(s1.principal == from_longs({0, 1}));

    // r = x^2 + 1: part x, b_next = 1
    SqrtAtInfinity s2 = laurent_sqrt_at_infinity(RatFun(from_longs({1, 0, 1}), Poly(1)), 1);
    CHECK(s2.principal == from_longs({0, 1}));
    CHECK(s2.b_next == SurdSum(1));

    // r = 4 with v = 0: part 2, a = 2
    SqrtAtInfinity s3 = laurent_sqrt_at_infinity(RatFun(4), 0);
    CHECK(s3.a == SurdSum(2));
    CHECK(s3.principal == Poly(2));
    CHECK(s3.b_next.is_zero());

    CHECK_THROWS_AS(laurent_sqrt_at_infinity(RatFun(from_longs({0, 0, 0, 1}), Poly(1)), 1),
                    OddInfinityOrder);
}

TEST_CASE("taylor series of rational functions") {
    // 1/(1-x) = 1 + x + x^2 + ... at 0
    RatFun r(Poly(1), from_longs({1, -1}));
    Series s = taylor_of_ratfun(r, Rational(0), 5);
    for (int i = 0; i < 5; ++i) CHECK(s[i] == SurdSum(1));
    // exp/log style identities for series ops: exp(antider(1/(1-x))) = 1/(1-x)
    Series integrand = taylor_of_ratfun(r, Rational(0), 8);
    Series logpart = series_antiderivative(integrand, 8);
    Series expd = series_exp(logpart, 8);
    Series target = taylor_of_ratfun(r, Rational(0), 8);
    for (int i = 0; i < 8; ++i) CHECK(expd[i] == target[i]);
}
