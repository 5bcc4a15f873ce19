#include "liouville/wilberforce.hpp"

#include <cmath>

#include "liouville/errors.hpp"

namespace liouville {

AdimResult adimensionalize(const PhysicalParams& p) {
    for (const Rational* q : {&p.m, &p.J, &p.k, &p.r0, &p.lambda_t, &p.g})
        if (q->sign() <= 0) throw DegenerateParameters("physical parameters must be positive");
    if (p.eps.sign() < 0) throw DegenerateParameters("coupling eps must be nonnegative");
    AdimResult out;
    out.ell = p.r0 + p.m * p.g / p.k;
    out.omega_p_sq = p.g / out.ell;
    out.omega_s_sq = p.k / p.m;
    out.params.a = p.J / (p.m * out.ell * out.ell);
    out.params.b = p.lambda_t / (p.k * out.ell * out.ell);
    out.params.c = p.eps / (p.k * out.ell);
    out.params.f = out.omega_p_sq / out.omega_s_sq;
    return out;
}

double hamiltonian_energy(const State& s, const DimensionlessParams& d) {
    double b = d.b.to_double(), c = d.c.to_double(), f = d.f.to_double();
    double stretch = s.rho - 1.0 + f;
    return 0.5 * (s.p_rho * s.p_rho + s.p_theta * s.p_theta / (s.rho * s.rho) + s.p_phi * s.p_phi) +
           0.5 * stretch * stretch + 0.5 * b * s.phi * s.phi + 0.5 * c * (s.rho - 1.0) * s.phi -
           f * s.rho * std::cos(s.theta);
}

State equations_of_motion(const State& s, const DimensionlessParams& d) {
    double b = d.b.to_double(), c = d.c.to_double(), f = d.f.to_double();
    double rho2 = s.rho * s.rho;
    double rho3 = rho2 * s.rho;
    State dot;
    dot.rho = s.p_rho;
    dot.theta = s.p_theta / rho2;
    dot.phi = s.p_phi;
    dot.p_rho = s.p_theta * s.p_theta / rho3 - (s.rho - 1.0 + f) - 0.5 * c * s.phi +
                f * std::cos(s.theta);
    dot.p_theta = -f * s.rho * std::sin(s.theta);
    dot.p_phi = -b * s.phi - 0.5 * c * (s.rho - 1.0);
    return dot;
}

NormalModes normal_modes(const Rational& b, const Rational& c) {
    NormalModes out;
    out.discriminant = (Rational(1) - b) * (Rational(1) - b) + c * c;
    SurdSum root = SurdSum::sqrt_of(out.discriminant);
    SurdSum half(Rational(1, 2));
    SurdSum one_plus_b(Rational(1) + b);
    out.omega1_sq = (one_plus_b + root) * half;
    out.omega2_sq = (one_plus_b - root) * half;
    out.tan_alpha = c.is_zero() ? SurdSum(0) : (SurdSum(b - Rational(1)) + root) / SurdSum(c);
    return out;
}

RatFun closed_form_variational_r(const Rational& lambda, const Rational& omega2_sq) {
    const Rational& w2 = omega2_sq;
    Poly num = Poly::from_coeffs({SurdSum(Rational(3) * w2), SurdSum(Rational(8) * lambda + Rational(3) * w2),
                                  SurdSum(-(Rational(4) * lambda + Rational(9) * w2)),
                                  SurdSum(Rational(3) * w2)});
    Poly den = Poly::from_roots({Rational(0), Rational(0), Rational(1), Rational(2), Rational(2)})
                   .scaled(SurdSum(Rational(4) * w2));
    return RatFun(num, den);
}

VariationalPipeline variational_pipeline(const VariationalParams& v) {
    if (v.B.is_zero()) throw DegenerateParameters("B = 0 leaves no cosine solution");
    VariationalPipeline out;
    out.b_hat = build_variational_b_hat(v.lambda, v.omega2_sq);
    out.algebrized = algebrize(RatFun(), out.b_hat, HamiltonianChange::cosine(v.omega2_sq));
    out.heun_form = shift(out.algebrized, Rational(1));
    out.heun = heun_parameters(out.heun_form);
    out.normal = to_normal_form(out.heun_form).normal;
    if (out.normal.r != closed_form_variational_r(v.lambda, v.omega2_sq))
        throw Error("variational reduction disagrees with the closed-form r");
    return out;
}

NormalODE2 normal_variational_r(const VariationalParams& v) { return variational_pipeline(v).normal; }

namespace {

VariationalParams variational_params(const Rational& b, const Rational& c, const Rational& f,
                                     const Rational& amplitude, bool cosine_branch) {
    if (f.is_zero()) throw DegenerateParameters("to avoid triviality f must be nonzero");
    if (amplitude.is_zero()) throw DegenerateParameters("solution amplitude must be nonzero");
    NormalModes modes = normal_modes(b, c);
    const SurdSum& w = cosine_branch ? modes.omega2_sq : modes.omega1_sq;
    auto w_rat = w.as_rational();
    if (!w_rat)
        throw SurdFrequency("omega^2 = " + w.str() +
                            " is irrational; pick parameters with a rational frequency, e.g. c = 0");
    if (w_rat->is_zero()) throw DegenerateParameters("omega^2 = 0 (c^2 = 4b) degenerates the pipeline");
    VariationalParams out;
    out.B = amplitude;
    out.lambda = f / amplitude;
    out.omega2_sq = *w_rat;
    return out;
}

}  // namespace

VariationalParams variational_params_cosine(const Rational& b, const Rational& c, const Rational& f,
                                            const Rational& B) {
    return variational_params(b, c, f, B, true);
}

VariationalParams variational_params_sine(const Rational& b, const Rational& c, const Rational& f,
                                          const Rational& A) {
    return variational_params(b, c, f, A, false);
}

const char* conclusion_str(Conclusion c) {
    switch (c) {
        case Conclusion::non_integrable: return "NonIntegrable";
        case Conclusion::no_obstruction: return "NoObstruction";
        default: return "Degenerate";
    }
}

WilberforceReport analyze_integrability(const Rational& b, const Rational& c, const Rational& f,
                                        const Rational& B) {
    if (f.is_zero()) throw DegenerateParameters("to avoid triviality f must be nonzero");
    if (B.is_zero()) throw DegenerateParameters("solution amplitude B must be nonzero");

    WilberforceReport out;
    out.b = b;
    out.c = c;
    out.f = f;
    out.B = B;
    out.modes = normal_modes(b, c);

    // theorem hypothesis: c^2 - 4b != 0, equivalently omega_2 != 0
    if (c * c == Rational(4) * b) {
        out.conclusion = Conclusion::degenerate;
        return out;
    }

    VariationalParams v = variational_params_cosine(b, c, f, B);
    out.lambda = v.lambda;
    out.omega2_sq = v.omega2_sq;
    VariationalPipeline pipe = variational_pipeline(v);
    out.heun = pipe.heun;
    out.variational = pipe.normal;
    out.analysis = kovacic(pipe.normal);
    out.conclusion = out.analysis->verdict.case_number == 4 ? Conclusion::non_integrable
                                                            : Conclusion::no_obstruction;
    return out;
}

}  // namespace liouville
