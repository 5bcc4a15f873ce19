#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouville/ode.hpp"
#include "testutil.hpp"

using namespace liouville;

namespace {

Poly from_longs(std::initializer_list<long> ascending) {
    std::vector<SurdSum> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly::from_coeffs(std::move(c));
}

// algebrized variational equation: y'' + x/(x^2-1) y' + (lambda - w2 x)/(w2 x (x^2-1)) y = 0
GeneralODE2 algebrized_variational(const Rational& lambda, const Rational& w2) {
    RatFun a(from_longs({0, 1}), from_longs({-1, 0, 1}));
    Poly num = Poly(lambda) - Poly::monomial(SurdSum(w2), 1);
    Poly den = Poly::from_roots({0, 1, -1}).scaled(SurdSum(w2));
    return {a, RatFun(num, den)};
}

// the same equation shifted to singularities {0, 1, 2} (Heun position)
GeneralODE2 heun_variational(const Rational& lambda, const Rational& w2) {
    return shift(algebrized_variational(lambda, w2), Rational(1));
}

RatFun paper_r(const Rational& lambda, const Rational& w2) {
    Poly num = Poly::from_coeffs({SurdSum(Rational(3) * w2),
                                  SurdSum(Rational(8) * lambda + Rational(3) * w2),
                                  SurdSum(-(Rational(4) * lambda + Rational(9) * w2)),
                                  SurdSum(Rational(3) * w2)});
    Poly den = Poly::from_roots({0, 0, 1, 2, 2}).scaled(SurdSum(Rational(4) * w2));
    return RatFun(num, den);
}

// degree-(n-1) truncated series solution of y'' + a y' + b y = 0 at x0
Series series_solution(const RatFun& a, const RatFun& b, const Rational& x0, const SurdSum& y0,
                       const SurdSum& y1, size_t n) {
    Series A = taylor_of_ratfun(a, x0, n);
    Series B = taylor_of_ratfun(b, x0, n);
    Series y(n);
    y[0] = y0;
    if (n > 1) y[1] = y1;
    for (size_t k = 0; k + 2 < n; ++k) {
        SurdSum acc;
        for (size_t j = 0; j <= k; ++j) {
            acc += A[j] * SurdSum(static_cast<long>(k + 1 - j)) * y[k + 1 - j];
            acc += B[j] * y[k - j];
        }
        y[k + 2] = -(acc / SurdSum(static_cast<long>((k + 2) * (k + 1))));
    }
    return y;
}

}  // namespace

TEST_CASE("normal form of the variational Heun equation reproduces the paper r") {
    for (auto [lambda, w2] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1), Rational(1)}, {Rational(3), Rational(1)}, {Rational(1, 4), Rational(2, 3)}}) {
        NormalForm nf = to_normal_form(heun_variational(lambda, w2));
        CHECK(nf.normal.r == paper_r(lambda, w2));
        CHECK(nf.gauge_a == heun_variational(lambda, w2).a);
    }
}

TEST_CASE("normal form basics") {
    // a = 0, b = -1  ->  r = 1
    CHECK(to_normal_form({RatFun(), RatFun(-1)}).normal.r == RatFun(1));
    // a = 2/x, b = 0: a^2/4 = 1/x^2, a'/2 = -1/x^2  ->  r = 0
    RatFun a(Poly(2), from_longs({0, 1}));
    CHECK(to_normal_form({a, RatFun()}).normal.r.is_zero());
}

TEST_CASE("shift moves singular points forward") {
    GeneralODE2 heun = heun_variational(Rational(1), Rational(1));
    // shifted: a = 1/(2x) + 1/(2x-4)
    RatFun expected_a = RatFun(Poly(Rational(1, 2)), from_longs({0, 1})) +
                        RatFun(Poly(Rational(1, 2)), from_longs({-2, 1}));
    CHECK(heun.a == expected_a);
    // b numerator -w2 x + lambda + w2 at lambda = w2 = 1: -x + 2
    CHECK(heun.b == RatFun(from_longs({2, -1}), Poly::from_roots({0, 1, 2})));

    // shift(shift(e, h), -h) = e
    testutil::Rng rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        GeneralODE2 e{RatFun(rng.poly(3), rng.nonzero_poly(2)), RatFun(rng.poly(3), rng.nonzero_poly(2))};
        Rational h = rng.rational(5, 3);
        GeneralODE2 back = shift(shift(e, h), -h);
        CHECK(back.a == e.a);
        CHECK(back.b == e.b);
    }

    // r = 1/x^2 shifted by 1 -> 1/(x-1)^2
    NormalODE2 n{RatFun(Poly(1), from_longs({0, 0, 1}))};
    CHECK(shift(n, Rational(1)).r == RatFun(Poly(1), Poly::from_roots({1, 1})));
    CHECK(shift(n, Rational(0)).r == n.r);
}

TEST_CASE("singularity classification of the algebrized equation") {
    SingularityReport rep = classify_singularities(algebrized_variational(Rational(1), Rational(1)));
    REQUIRE(rep.points.size() == 4);
    CHECK(rep.points[0].location == Rational(-1));
    CHECK(rep.points[1].location == Rational(0));
    CHECK(rep.points[2].location == Rational(1));
    CHECK(rep.points[3].at_infinity);
    for (const auto& p : rep.points) CHECK(p.kind == SingularityKind::regular);
}

TEST_CASE("singularity classification edge cases") {
    // constant coefficients: no finite singularities, infinity irregular
    SingularityReport rep = classify_singularities({RatFun(), RatFun(1)});
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].at_infinity);
    CHECK(rep.points[0].kind == SingularityKind::irregular);

    // b = 1/x^5: order 5 > 2 makes 0 irregular
    SingularityReport rep2 =
        classify_singularities({RatFun(), RatFun(Poly(1), Poly::monomial(SurdSum(1), 5))});
    CHECK(rep2.points[0].location == Rational(0));
    CHECK(rep2.points[0].kind == SingularityKind::irregular);

    // Cauchy-Euler: x^2 y'' + x y' - y = 0 is regular at 0 and infinity
    SingularityReport rep3 = classify_singularities(
        {RatFun(Poly(1), from_longs({0, 1})), RatFun(Poly(-1), from_longs({0, 0, 1}))});
    CHECK(rep3.points[0].kind == SingularityKind::regular);
    CHECK(rep3.points[1].kind == SingularityKind::regular);

    CHECK_THROWS_AS(classify_singularities({RatFun(Poly(1), from_longs({1, 0, 1})), RatFun()}),
                    NonRationalPoles);
}

TEST_CASE("classification is shift-invariant") {
    testutil::Rng rng(17);
    GeneralODE2 e = algebrized_variational(Rational(2), Rational(1, 2));
    for (int iter = 0; iter < 10; ++iter) {
        Rational h = rng.rational(4, 2);
        SingularityReport base = classify_singularities(e);
        SingularityReport moved = classify_singularities(shift(e, h));
        REQUIRE(base.points.size() == moved.points.size());
        for (size_t i = 0; i < base.points.size(); ++i) {
            CHECK(base.points[i].kind == moved.points[i].kind);
            if (!base.points[i].at_infinity)
                CHECK(base.points[i].location + h == moved.points[i].location);
        }
    }
}

TEST_CASE("heun parameters of the shifted variational equation") {
    // a = 2, epsilon = gamma = 1/2, delta = 0, mu = 1, beta = -1, q = -lambda/w2 - 1
    HeunParams h = heun_parameters(heun_variational(Rational(1), Rational(1)));
    CHECK(h.a == Rational(2));
    CHECK(h.gamma == SurdSum(Rational(1, 2)));
    CHECK(h.epsilon == SurdSum(Rational(1, 2)));
    CHECK(h.delta.is_zero());
    CHECK(h.mu == SurdSum(1));
    CHECK(h.beta == SurdSum(-1));
    CHECK(h.q == SurdSum(-2));

    HeunParams h2 = heun_parameters(heun_variational(Rational(3), Rational(1)));
    CHECK(h2.q == SurdSum(-4));

    // Fuchs relation on a spread of parameters
    for (auto [lambda, w2] : std::vector<std::pair<Rational, Rational>>{
             {Rational(5, 3), Rational(2)}, {Rational(-1, 2), Rational(1, 3)}, {Rational(7), Rational(4)}}) {
        HeunParams hp = heun_parameters(heun_variational(lambda, w2));
        CHECK(hp.epsilon + hp.gamma + hp.delta - hp.mu - hp.beta == SurdSum(1));
        CHECK(hp.q == SurdSum(-lambda / w2 - Rational(1)));
    }
}

TEST_CASE("heun extraction rejects non-Heun shapes") {
    // hypergeometric: only two finite singular points
    RatFun a(from_longs({0, 1}), Poly::from_roots({0, 1}));
    RatFun b(Poly(1), Poly::from_roots({0, 1}));
    CHECK_THROWS_AS(heun_parameters({a, b}), NotHeunShape);
    // irregular singular point
    CHECK_THROWS_AS(heun_parameters({RatFun(), RatFun(Poly(1), Poly::monomial(SurdSum(1), 5))}),
                    NotHeunShape);
}

TEST_CASE("normal form gauge identity on exact Taylor series") {
    const size_t order = 11;  // coefficients t^0..t^10
    auto check_gauge = [&](const GeneralODE2& ode, const Rational& x0, long y0v, long y1v) {
        NormalForm nf = to_normal_form(ode);
        SurdSum y0(y0v), y1(y1v);
        Series A = taylor_of_ratfun(ode.a, x0, order);
        Series g = series_exp(series_antiderivative(
                                  series_mul(A, Series{SurdSum(Rational(1, 2))}, order), order),
                              order);
        // xi = y * g solves xi'' = r xi with xi(x0) = y0, xi'(x0) = y1 + y0 A0/2
        Series y = series_solution(ode.a, ode.b, x0, y0, y1, order);
        SurdSum xi1 = y1 + y0 * A[0] * SurdSum(Rational(1, 2));
        Series xi = series_solution(RatFun(), -nf.normal.r, x0, y0, xi1, order);
        Series prod = series_mul(y, g, order);
        for (size_t k = 0; k < order; ++k) CHECK(xi[k] == prod[k]);
    };

    check_gauge(heun_variational(Rational(1), Rational(1)), Rational(3), 1, 0);
    check_gauge(heun_variational(Rational(1), Rational(1)), Rational(-1), 2, -1);
    check_gauge(algebrized_variational(Rational(2), Rational(3)), Rational(1, 2), 1, 1);
    // generic small equation, ordinary point 0
    GeneralODE2 simple{RatFun(from_longs({1, 1}), from_longs({2, 0, 1})),
                       RatFun(from_longs({0, 3}), from_longs({1, 1, 1}))};
    check_gauge(simple, Rational(0), 1, 2);
}
