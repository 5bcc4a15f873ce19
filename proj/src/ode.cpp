#include "liouville/ode.hpp"

#include <algorithm>
#include <set>

#include "liouville/errors.hpp"

namespace liouville {

NormalForm to_normal_form(const GeneralODE2& ode) {
    RatFun quarter(Rational(1, 4)), half(Rational(1, 2));
    NormalForm out;
    out.normal.r = ode.a * ode.a * quarter + ode.a.derivative() * half - ode.b;
    out.gauge_a = ode.a;
    return out;
}

GeneralODE2 shift(const GeneralODE2& ode, const Rational& h) {
    return {ode.a.composed_shift(h), ode.b.composed_shift(h)};
}

NormalODE2 shift(const NormalODE2& ode, const Rational& h) {
    return {ode.r.composed_shift(h)};
}

const char* singularity_kind_str(SingularityKind k) {
    switch (k) {
        case SingularityKind::ordinary: return "ordinary";
        case SingularityKind::regular: return "regular";
        default: return "irregular";
    }
}

namespace {

std::vector<std::pair<Rational, int>> rational_poles_of(const RatFun& r) {
    if (r.is_zero() || r.is_poly()) return {};
    auto split = rational_roots(r.den());
    if (!split || split->residual.degree() > 0)
        throw NonRationalPoles("coefficient has non-rational poles");
    return split->roots;
}

// r(1/w) as a rational function of w
RatFun substituted_inverse(const RatFun& r) {
    if (r.is_zero()) return r;
    auto reversed = [](const Poly& p) {
        std::vector<SurdSum> c(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(p.degree() - i);
        return Poly::from_coeffs(std::move(c));
    };
    int gap = r.den().degree() - r.num().degree();
    Poly num = reversed(r.num());
    Poly den = reversed(r.den());
    if (gap >= 0) return RatFun(num * Poly::x().pow(gap), den);
    return RatFun(num, den * Poly::x().pow(-gap));
}

}  // namespace

SingularityReport classify_singularities(const GeneralODE2& ode) {
    std::set<Rational> locations;
    for (const auto& [c, mult] : rational_poles_of(ode.a)) locations.insert(c);
    for (const auto& [c, mult] : rational_poles_of(ode.b)) locations.insert(c);

    SingularityReport out;
    for (const Rational& c : locations) {
        int oa = ode.a.pole_order(c);
        int ob = ode.b.pole_order(c);
        SingularityKind kind = (oa <= 1 && ob <= 2) ? SingularityKind::regular : SingularityKind::irregular;
        out.points.push_back({false, c, kind});
    }

    // x -> 1/w sends infinity to 0: y'' + (2/w - a(1/w)/w^2) y' + b(1/w)/w^4 y = 0
    RatFun w = RatFun::x();
    RatFun a_inf = RatFun(2) / w - substituted_inverse(ode.a) / (w * w);
    RatFun b_inf = substituted_inverse(ode.b) / (w * w * w * w);
    int oa = a_inf.pole_order(Rational(0));
    int ob = b_inf.pole_order(Rational(0));
    SingularityKind inf_kind = SingularityKind::irregular;
    if (oa == 0 && ob == 0)
        inf_kind = SingularityKind::ordinary;
    else if (oa <= 1 && ob <= 2)
        inf_kind = SingularityKind::regular;
    out.points.push_back({true, Rational(0), inf_kind});
    return out;
}

HeunParams heun_parameters(const GeneralODE2& ode) {
    SingularityReport report;
    try {
        report = classify_singularities(ode);
    } catch (const NonRationalPoles&) {
        throw NotHeunShape("singular points are not all rational");
    }

    std::vector<Rational> finite;
    for (const auto& p : report.points) {
        if (p.at_infinity) {
            if (p.kind != SingularityKind::regular)
                throw NotHeunShape("infinity is not a regular singular point");
        } else {
            if (p.kind != SingularityKind::regular)
                throw NotHeunShape("irregular finite singular point");
            finite.push_back(p.location);
        }
    }
    if (finite.size() != 3) throw NotHeunShape("expected exactly three finite singular points, found " +
                                               std::to_string(finite.size()));
    Rational zero(0), one(1);
    if (!std::count(finite.begin(), finite.end(), zero) || !std::count(finite.begin(), finite.end(), one))
        throw NotHeunShape("singular set must contain 0 and 1 (shift/scale the equation first)");
    Rational a_pt;
    for (const Rational& c : finite)
        if (c != zero && c != one) a_pt = c;

    SurdSum gamma = laurent_coeff_at_pole(ode.a, zero, -1);
    SurdSum delta = laurent_coeff_at_pole(ode.a, one, -1);
    SurdSum epsilon = laurent_coeff_at_pole(ode.a, a_pt, -1);
    RatFun a_model = RatFun(Poly(gamma)) / RatFun(Poly::x()) +
                     RatFun(Poly(delta)) / RatFun(Poly::x() - Poly(one)) +
                     RatFun(Poly(epsilon)) / RatFun(Poly::x() - Poly(a_pt));
    if (a_model != ode.a) throw NotHeunShape("y' coefficient is not a sum of simple poles at 0, 1, a");

    Poly cubic = Poly::from_roots({zero, one, a_pt});
    RatFun scaled = ode.b * RatFun(cubic);
    if (!scaled.is_poly() || scaled.num().degree() > 1)
        throw NotHeunShape("y coefficient is not (mu*beta*x - q)/(x(x-1)(x-a))");
    SurdSum mu_beta = scaled.num().coeff(1);
    SurdSum q = -scaled.num().coeff(0);

    // exponents at infinity: mu + beta fixed by the Fuchs relation, mu*beta read off
    SurdSum mu_plus_beta = epsilon + gamma + delta - SurdSum(1);
    SurdSum disc = mu_plus_beta * mu_plus_beta - SurdSum(4) * mu_beta;
    SurdSum root = disc.sqrt();
    SurdSum half(Rational(1, 2));

    HeunParams out;
    out.a = a_pt;
    out.gamma = gamma;
    out.delta = delta;
    out.epsilon = epsilon;
    out.mu = (mu_plus_beta + root) * half;
    out.beta = (mu_plus_beta - root) * half;
    out.q = q;
    if (out.epsilon + out.gamma + out.delta - out.mu - out.beta != SurdSum(1))
        throw Error("Fuchs relation violated in Heun extraction");
    return out;
}

}  // namespace liouville
