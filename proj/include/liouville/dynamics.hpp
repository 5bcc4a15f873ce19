#pragma once

#include <array>
#include <vector>

#include "liouville/kovacic.hpp"
#include "liouville/wilberforce.hpp"

namespace liouville {

// Floating-point validation layer: classical fixed-step RK4 throughout,
// doubles only; the symbolic modules never touch this code.

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<double> energy;
    double dt = 0.0;
};

// Aborts with RhoCollapse when rho <= 0 is reached.
Trajectory integrate(const DimensionlessParams& d, const State& s0, double t_end, double dt);

// Row-major 6x6, variable order (rho, theta, phi, P_rho, P_theta, P_phi).
using Mat6 = std::array<double, 36>;
Mat6 eom_jacobian(const State& s, const DimensionlessParams& d);
double det6(Mat6 m);

struct VariationalTrajectory {
    std::vector<double> times;
    std::vector<Mat6> fundamental;  // M(t), M(0) = I
};
// Integrates M' = J(t) M along the base trajectory (re-integrated in lockstep
// from base.states[0] with the same step).
VariationalTrajectory variational_integrate(const Trajectory& base, const DimensionlessParams& d);

// coordinate: 0 rho, 1 theta, 2 phi, 3 P_rho, 4 P_theta, 5 P_phi
double state_coord(const State& s, int coordinate);

struct Section {
    int coordinate = 1;
    double value = 0.0;
    int direction = +1;  // +1 upward, -1 downward, 0 both
};
struct SectionPoint {
    double t;
    State state;
    int direction;
};
// Sign-change detection with cubic Hermite interpolation of the crossing.
std::vector<SectionPoint> poincare_section(const Trajectory& traj, const DimensionlessParams& d,
                                           const Section& sec);

// Integrates eta'' = (lambda/cos(w t) - w^2) eta on [t0, t1] and the
// algebrized equation in z = cos(w t) over the image interval, and returns
// max |eta(t) - y_hat(cos w t)|. Throws SingularityInInterval when cos(w t)
// or sin(w t) vanishes inside the interval.
double second_order_transport_check(const VariationalParams& v, double t0, double t1,
                                    int steps = 4096);

// Numeric hooks for the case-1 second solution zeta_2 = zeta_1 ∫ dx/zeta_1^2
// (quadrature along [x_ref, x], which must avoid poles of omega and P).
double eval_first_solution(const SecondSolutionRecipe& recipe, double x, double x_ref,
                           int panels = 4096);
double eval_second_solution(const SecondSolutionRecipe& recipe, double x, double x_ref,
                            int panels = 4096);

}  // namespace liouville
