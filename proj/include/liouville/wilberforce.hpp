#pragma once

#include <optional>

#include "liouville/algebrize.hpp"
#include "liouville/kovacic.hpp"

namespace liouville {

// m mass, J moment of inertia, k spring constant, r0 unstretched length,
// lambda_t torsional constant, eps longitudinal/torsional coupling, g gravity.
struct PhysicalParams {
    Rational m, J, k, r0, lambda_t, eps, g;
};

// a = J/(m l^2), b = lambda_t/(k l^2), c = eps/(k l), f = (omega_p/omega_s)^2;
// the Hamiltonian below is written after scaling phi so that a = 1.
struct DimensionlessParams {
    Rational a, b, c, f;
};

struct AdimResult {
    DimensionlessParams params;
    Rational ell;         // l = r0 + m g / k
    Rational omega_p_sq;  // g / l
    Rational omega_s_sq;  // k / m
};
AdimResult adimensionalize(const PhysicalParams& p);

// Dimensionless phase-space point (rho > 0 during integration).
struct State {
    double rho = 1.0, theta = 0.0, phi = 0.0;
    double p_rho = 0.0, p_theta = 0.0, p_phi = 0.0;
};

// H = (P_rho^2 + P_theta^2/rho^2 + P_phi^2)/2 + (rho-1+f)^2/2
//     + b phi^2/2 + c (rho-1) phi/2 - f rho cos(theta)
double hamiltonian_energy(const State& s, const DimensionlessParams& d);

// Canonical equations of the Hamiltonian above; returns d(state)/dt.
State equations_of_motion(const State& s, const DimensionlessParams& d);

struct NormalModes {
    SurdSum omega1_sq;   // (1 + b + sqrt((b-1)^2 + c^2)) / 2
    SurdSum omega2_sq;   // (1 + b - sqrt((b-1)^2 + c^2)) / 2
    SurdSum tan_alpha;   // rotation killing the cross term; 0 when c = 0
    Rational discriminant;  // (1-b)^2 + c^2
};
NormalModes normal_modes(const Rational& b, const Rational& c);

struct VariationalParams {
    Rational B;          // amplitude of the selected rho = B cos(omega_2 t) solution
    Rational lambda;     // f / B
    Rational omega2_sq;  // must be rational for the symbolic pipeline
};

// Stages of the symbolic reduction rho = B cos(omega_2 t), z = cos(omega_2 t):
// b_hat -> algebrized equation -> Heun form (shift by 1) -> normal form,
// with the normal form cross-checked against the closed-form r.
struct VariationalPipeline {
    RatFun b_hat;
    GeneralODE2 algebrized;
    GeneralODE2 heun_form;
    HeunParams heun;
    NormalODE2 normal;
};
VariationalPipeline variational_pipeline(const VariationalParams& v);
NormalODE2 normal_variational_r(const VariationalParams& v);
// Closed form of the reduced coefficient r (paper trace target).
RatFun closed_form_variational_r(const Rational& lambda, const Rational& omega2_sq);

// B != 0 cosine branch of the selected solution; SurdFrequency when omega_2^2
// is irrational (pick parameters with rational omega_2^2, e.g. c = 0).
VariationalParams variational_params_cosine(const Rational& b, const Rational& c,
                                            const Rational& f, const Rational& B);
// A != 0 sine branch: rho = A sin(omega_1 t), z = sin(omega_1 t); the same
// alpha = w^2(1 - z^2) machinery with omega_1^2 in place of omega_2^2.
VariationalParams variational_params_sine(const Rational& b, const Rational& c,
                                          const Rational& f, const Rational& A);

enum class Conclusion { non_integrable, no_obstruction, degenerate };
const char* conclusion_str(Conclusion c);

struct WilberforceReport {
    Rational b, c, f, B;
    NormalModes modes;
    Conclusion conclusion;
    // absent when the theorem hypothesis c^2 != 4b fails (degenerate):
    std::optional<Rational> lambda;
    std::optional<Rational> omega2_sq;
    std::optional<HeunParams> heun;
    std::optional<NormalODE2> variational;
    std::optional<KovacicAnalysis> analysis;
};

// Full pipeline: normal modes, degeneracy guard c^2 = 4b, variational
// reduction, Kovacic run. NonIntegrable iff the verdict is case 4.
WilberforceReport analyze_integrability(const Rational& b, const Rational& c,
                                        const Rational& f, const Rational& B);

}  // namespace liouville
