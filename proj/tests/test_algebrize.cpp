#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouville/algebrize.hpp"
#include "testutil.hpp"

using namespace liouville;

namespace {

Poly from_longs(std::initializer_list<long> ascending) {
    std::vector<SurdSum> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("ratfun square roots") {
    RatFun x = RatFun::x();
    CHECK(*ratfun_sqrt(x * x) == x);
    CHECK(*ratfun_sqrt(RatFun(from_longs({0, 0, 4}), Poly::from_roots({-1, -1}))) ==
          RatFun(from_longs({0, 2}), from_longs({1, 1})));
    // sqrt(2 x^2) = sqrt(2) x
    RatFun root = *ratfun_sqrt(RatFun(from_longs({0, 0, 2}), Poly(1)));
    CHECK(root * root == RatFun(from_longs({0, 0, 2}), Poly(1)));
    CHECK(!ratfun_sqrt(x).has_value());
    CHECK(!ratfun_sqrt(x * x + RatFun(1)).has_value());
    CHECK(ratfun_sqrt(RatFun())->is_zero());
}

TEST_CASE("variational b_hat values and guards") {
    // b_hat = -(lambda/x - w2^2) = (w2^2 x - lambda)/x
    CHECK(build_variational_b_hat(Rational(1), Rational(1)) == RatFun(from_longs({-1, 1}), from_longs({0, 1})));
    RatFun b = build_variational_b_hat(Rational(1, 4), Rational(3, 4));
    CHECK(b == RatFun(Poly::from_coeffs({SurdSum(Rational(-1, 4)), SurdSum(Rational(3, 4))}),
                      from_longs({0, 1})));
    CHECK_THROWS_AS(build_variational_b_hat(Rational(0), Rational(1)), DegenerateParameters);
    CHECK_THROWS_AS(build_variational_b_hat(Rational(1), Rational(0)), DegenerateParameters);
}

TEST_CASE("cosine algebrization reproduces the algebrized variational equation") {
    for (auto [lambda, w2] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1), Rational(1)}, {Rational(1, 4), Rational(3, 4)}, {Rational(-2), Rational(5, 2)}}) {
        GeneralODE2 ode =
            algebrize(RatFun(), build_variational_b_hat(lambda, w2), HamiltonianChange::cosine(w2));
        // y'' + x/(x^2-1) y' + (lambda - w2 x)/(w2 x (x^2-1)) y = 0
        CHECK(ode.a == RatFun(from_longs({0, 1}), from_longs({-1, 0, 1})));
        Poly bnum = Poly(lambda) - Poly::monomial(SurdSum(w2), 1);
        Poly bden = Poly::from_roots({0, 1, -1}).scaled(SurdSum(w2));
        CHECK(ode.b == RatFun(bnum, bden));
    }
}

TEST_CASE("harmonic oscillator algebrizes to the Chebyshev equation") {
    // eta'' + w^2 eta = 0 (solution cos wt) with z = cos(wt):
    // (1-z^2) y'' - z y' + y = 0, solved by y = z
    Rational w2(4);
    GeneralODE2 ode = algebrize(RatFun(), RatFun(w2), HamiltonianChange::cosine(w2));
    CHECK(ode.a == RatFun(from_longs({0, 1}), from_longs({-1, 0, 1})));
    CHECK(ode.b == RatFun(Poly(-1), from_longs({-1, 0, 1})));
    // y = z: y'' + a y' + b y = a + b z must vanish identically
    CHECK((ode.a + ode.b * RatFun::x()).is_zero());
}

TEST_CASE("exponential algebrization") {
    // b_hat = 1, z = e^t: A = alpha'/(2 alpha) = 1/z, B = 1/z^2
    GeneralODE2 ode = algebrize(RatFun(), RatFun(1), HamiltonianChange::exponential(Rational(1)));
    CHECK(ode.a == RatFun(Poly(1), from_longs({0, 1})));
    CHECK(ode.b == RatFun(Poly(1), from_longs({0, 0, 1})));
    // the exponential change has rational sqrt(alpha), so a_hat != 0 is allowed
    GeneralODE2 drift = algebrize(RatFun(1), RatFun(1), HamiltonianChange::exponential(Rational(1)));
    CHECK(drift.a == RatFun(Poly(2), from_longs({0, 1})));
    CHECK(drift.b == RatFun(Poly(1), from_longs({0, 0, 1})));
}

TEST_CASE("identity change returns the equation unchanged") {
    RatFun b_hat(from_longs({1, 2}), from_longs({0, 0, 3}));
    GeneralODE2 ode = algebrize(RatFun(), b_hat, HamiltonianChange::custom(RatFun(1)));
    CHECK(ode.a.is_zero());
    CHECK(ode.b == b_hat);
}

TEST_CASE("non-rational drift is rejected") {
    CHECK_THROWS_AS(algebrize(RatFun(1), RatFun(1), HamiltonianChange::cosine(Rational(1))),
                    NonRationalDrift);
    CHECK_THROWS_AS(HamiltonianChange::cosine(Rational(0)), DegenerateParameters);
    CHECK_THROWS_AS(HamiltonianChange::custom(RatFun()), DegenerateParameters);
}
