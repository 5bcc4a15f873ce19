#pragma once

#include <optional>

#include "liouville/ode.hpp"

namespace liouville {

enum class ChangeKind { cosine, exponential, custom };

// Hamiltonian change of the independent variable z = z(t): (dz/dt)^2 = alpha(z).
// cosine(w^2):      z = cos(w t),  alpha = w^2 (1 - z^2)
// exponential(m^2): z = e^{m t},   alpha = m^2 z^2
struct HamiltonianChange {
    ChangeKind kind;
    RatFun alpha;

    static HamiltonianChange cosine(const Rational& omega_sq);
    static HamiltonianChange exponential(const Rational& mu_sq);
    static HamiltonianChange custom(RatFun alpha);
};

// sqrt of a rational function within the surd field, when it exists
std::optional<RatFun> ratfun_sqrt(const RatFun& f);

// Algebrization of d^2y + a_hat dy + b_hat y = 0 (hat-derivatives d = sqrt(alpha) d/dz):
//   alpha y'' + (alpha'/2 + sqrt(alpha) a_hat) y' + b_hat y = 0,
// returned as y'' + A y' + B y = 0. Throws NonRationalDrift when a_hat != 0
// and sqrt(alpha) is not rational in z. With a_hat = 0 only alpha and alpha'
// enter, so the sign choice of sqrt(alpha) never matters on that path.
GeneralODE2 algebrize(const RatFun& a_hat, const RatFun& b_hat, const HamiltonianChange& change);

// b_hat of the reduced normal variational equation:
// eta'' = (lambda/x - w2^2) eta  =>  b_hat = -(lambda/x - w2^2).
// The sine branch of the pipeline reuses this with omega_1^2.
RatFun build_variational_b_hat(const Rational& lambda, const Rational& omega2_sq);

}  // namespace liouville
