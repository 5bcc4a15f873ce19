#pragma once

#include "liouville/laurent.hpp"
#include "liouville/ratfun.hpp"

namespace liouville {

// y'' + a y' + b y = 0
struct GeneralODE2 {
    RatFun a, b;
};

// xi'' = r xi
struct NormalODE2 {
    RatFun r;
};

// xi = y * exp(1/2 ∫ gauge_a); r = a^2/4 + a'/2 - b. The gauge is kept as
// the rational function a itself since its half-integral exponential is
// generally not rational.
struct NormalForm {
    NormalODE2 normal;
    RatFun gauge_a;
};
NormalForm to_normal_form(const GeneralODE2& ode);

// Coefficients composed with x -> x - h: singular points move by +h.
GeneralODE2 shift(const GeneralODE2& ode, const Rational& h);
NormalODE2 shift(const NormalODE2& ode, const Rational& h);

enum class SingularityKind { ordinary, regular, irregular };
const char* singularity_kind_str(SingularityKind k);

struct SingularPoint {
    bool at_infinity;
    Rational location;  // meaningful only when !at_infinity
    SingularityKind kind;
};

// Every finite pole of a or b (sorted), then the point at infinity.
struct SingularityReport {
    std::vector<SingularPoint> points;
};
SingularityReport classify_singularities(const GeneralODE2& ode);

// Heun equation parameters:
//   y'' + (gamma/x + delta/(x-1) + epsilon/(x-a)) y'
//      + (mu*beta*x - q) / (x(x-1)(x-a)) y = 0,  epsilon+gamma+delta-mu-beta = 1.
struct HeunParams {
    Rational a;
    SurdSum gamma, delta, epsilon, mu, beta, q;
};
HeunParams heun_parameters(const GeneralODE2& ode);

}  // namespace liouville
