#include "liouville/dynamics.hpp"

#include <cmath>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

State axpy(const State& s, double h, const State& k) {
    return {s.rho + h * k.rho,     s.theta + h * k.theta,     s.phi + h * k.phi,
            s.p_rho + h * k.p_rho, s.p_theta + h * k.p_theta, s.p_phi + h * k.p_phi};
}

State rk4_combine(const State& s, double dt, const State& k1, const State& k2, const State& k3,
                  const State& k4) {
    auto mix = [dt](double s0, double a, double b, double c, double d) {
        return s0 + dt / 6.0 * (a + 2.0 * b + 2.0 * c + d);
    };
    return {mix(s.rho, k1.rho, k2.rho, k3.rho, k4.rho),
            mix(s.theta, k1.theta, k2.theta, k3.theta, k4.theta),
            mix(s.phi, k1.phi, k2.phi, k3.phi, k4.phi),
            mix(s.p_rho, k1.p_rho, k2.p_rho, k3.p_rho, k4.p_rho),
            mix(s.p_theta, k1.p_theta, k2.p_theta, k3.p_theta, k4.p_theta),
            mix(s.p_phi, k1.p_phi, k2.p_phi, k3.p_phi, k4.p_phi)};
}

State rk4_step(const DimensionlessParams& d, const State& s, double dt) {
    State k1 = equations_of_motion(s, d);
    State k2 = equations_of_motion(axpy(s, 0.5 * dt, k1), d);
    State k3 = equations_of_motion(axpy(s, 0.5 * dt, k2), d);
    State k4 = equations_of_motion(axpy(s, dt, k3), d);
    return rk4_combine(s, dt, k1, k2, k3, k4);
}

Mat6 matmul6(const Mat6& a, const Mat6& b) {
    Mat6 out{};
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            double aik = a[i * 6 + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < 6; ++j) out[i * 6 + j] += aik * b[k * 6 + j];
        }
    return out;
}

}  // namespace

Trajectory integrate(const DimensionlessParams& d, const State& s0, double t_end, double dt) {
    if (dt <= 0.0) throw Error("dt must be positive");
    if (s0.rho <= 0.0) throw RhoCollapse(0.0);
    Trajectory traj;
    traj.dt = dt;
    long nsteps = std::lround(t_end / dt);
    traj.times.reserve(nsteps + 1);
    traj.states.reserve(nsteps + 1);
    traj.energy.reserve(nsteps + 1);

    State s = s0;
    traj.times.push_back(0.0);
    traj.states.push_back(s);
    traj.energy.push_back(hamiltonian_energy(s, d));
    for (long i = 1; i <= nsteps; ++i) {
        s = rk4_step(d, s, dt);
        double t = static_cast<double>(i) * dt;
        if (!(s.rho > 0.0) || !std::isfinite(s.rho)) throw RhoCollapse(t);
        traj.times.push_back(t);
        traj.states.push_back(s);
        traj.energy.push_back(hamiltonian_energy(s, d));
    }
    return traj;
}

Mat6 eom_jacobian(const State& s, const DimensionlessParams& d) {
    double b = d.b.to_double(), c = d.c.to_double(), f = d.f.to_double();
    double rho2 = s.rho * s.rho, rho3 = rho2 * s.rho, rho4 = rho3 * s.rho;
    double sin_t = std::sin(s.theta), cos_t = std::cos(s.theta);
    Mat6 j{};
    auto at = [&j](int row, int col) -> double& { return j[row * 6 + col]; };
    // rho' = P_rho
    at(0, 3) = 1.0;
    // theta' = P_theta / rho^2
    at(1, 0) = -2.0 * s.p_theta / rho3;
    at(1, 4) = 1.0 / rho2;
    // phi' = P_phi
    at(2, 5) = 1.0;
    // P_rho' = P_theta^2/rho^3 - (rho-1+f) - c phi/2 + f cos(theta)
    at(3, 0) = -3.0 * s.p_theta * s.p_theta / rho4 - 1.0;
    at(3, 1) = -f * sin_t;
    at(3, 2) = -0.5 * c;
    at(3, 4) = 2.0 * s.p_theta / rho3;
    // P_theta' = -f rho sin(theta)
    at(4, 0) = -f * sin_t;
    at(4, 1) = -f * s.rho * cos_t;
    // P_phi' = -b phi - c (rho-1)/2
    at(5, 0) = -0.5 * c;
    at(5, 2) = -b;
    return j;
}

double det6(Mat6 m) {
    double det = 1.0;
    for (int col = 0; col < 6; ++col) {
        int piv = col;
        for (int row = col + 1; row < 6; ++row)
            if (std::fabs(m[row * 6 + col]) > std::fabs(m[piv * 6 + col])) piv = row;
        if (m[piv * 6 + col] == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < 6; ++j) std::swap(m[piv * 6 + j], m[col * 6 + j]);
            det = -det;
        }
        det *= m[col * 6 + col];
        for (int row = col + 1; row < 6; ++row) {
            double factor = m[row * 6 + col] / m[col * 6 + col];
            for (int j = col; j < 6; ++j) m[row * 6 + j] -= factor * m[col * 6 + j];
        }
    }
    return det;
}

VariationalTrajectory variational_integrate(const Trajectory& base, const DimensionlessParams& d) {
    if (base.states.empty()) throw Error("empty base trajectory");
    struct Aug {
        State s;
        Mat6 m{};
    };
    auto deriv = [&d](const Aug& a) {
        Aug dot;
        dot.s = equations_of_motion(a.s, d);
        dot.m = matmul6(eom_jacobian(a.s, d), a.m);
        return dot;
    };
    auto aug_axpy = [](const Aug& a, double h, const Aug& k) {
        Aug out;
        out.s = axpy(a.s, h, k.s);
        for (int i = 0; i < 36; ++i) out.m[i] = a.m[i] + h * k.m[i];
        return out;
    };

    Aug a;
    a.s = base.states.front();
    for (int i = 0; i < 6; ++i) a.m[i * 6 + i] = 1.0;

    VariationalTrajectory out;
    out.times.push_back(0.0);
    out.fundamental.push_back(a.m);
    double dt = base.dt;
    for (size_t step = 1; step < base.states.size(); ++step) {
        Aug k1 = deriv(a);
        Aug k2 = deriv(aug_axpy(a, 0.5 * dt, k1));
        Aug k3 = deriv(aug_axpy(a, 0.5 * dt, k2));
        Aug k4 = deriv(aug_axpy(a, dt, k3));
        a.s = rk4_combine(a.s, dt, k1.s, k2.s, k3.s, k4.s);
        for (int i = 0; i < 36; ++i)
            a.m[i] += dt / 6.0 * (k1.m[i] + 2.0 * k2.m[i] + 2.0 * k3.m[i] + k4.m[i]);
        out.times.push_back(static_cast<double>(step) * dt);
        out.fundamental.push_back(a.m);
    }
    return out;
}

double state_coord(const State& s, int coordinate) {
    switch (coordinate) {
        case 0: return s.rho;
        case 1: return s.theta;
        case 2: return s.phi;
        case 3: return s.p_rho;
        case 4: return s.p_theta;
        case 5: return s.p_phi;
        default: throw Error("state coordinate index out of range");
    }
}

namespace {

double hermite(double p0, double m0, double p1, double m1, double h, double s) {
    double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * h * m0 + (-2 * s3 + 3 * s2) * p1 +
           (s3 - s2) * h * m1;
}

}  // namespace

std::vector<SectionPoint> poincare_section(const Trajectory& traj, const DimensionlessParams& d,
                                           const Section& sec) {
    std::vector<SectionPoint> out;
    if (traj.states.size() < 2) return out;
    for (size_t k = 0; k + 1 < traj.states.size(); ++k) {
        const State& s0 = traj.states[k];
        const State& s1 = traj.states[k + 1];
        double g0 = state_coord(s0, sec.coordinate) - sec.value;
        double g1 = state_coord(s1, sec.coordinate) - sec.value;
        if (!(g0 * g1 < 0.0)) continue;  // strict sign change; tangencies excluded
        int dir = g1 > g0 ? +1 : -1;
        if (sec.direction != 0 && dir != sec.direction) continue;

        State d0 = equations_of_motion(s0, d);
        State d1 = equations_of_motion(s1, d);
        double h = traj.times[k + 1] - traj.times[k];
        double p0 = state_coord(s0, sec.coordinate), m0 = state_coord(d0, sec.coordinate);
        double p1 = state_coord(s1, sec.coordinate), m1 = state_coord(d1, sec.coordinate);

        double lo = 0.0, hi = 1.0;
        double glo = g0;
        for (int iter = 0; iter < 80; ++iter) {
            double mid = 0.5 * (lo + hi);
            double gm = hermite(p0, m0, p1, m1, h, mid) - sec.value;
            if ((gm < 0) == (glo < 0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        double star = 0.5 * (lo + hi);

        SectionPoint pt;
        pt.t = traj.times[k] + star * h;
        pt.direction = dir;
        pt.state = {
            hermite(s0.rho, d0.rho, s1.rho, d1.rho, h, star),
            hermite(s0.theta, d0.theta, s1.theta, d1.theta, h, star),
            hermite(s0.phi, d0.phi, s1.phi, d1.phi, h, star),
            hermite(s0.p_rho, d0.p_rho, s1.p_rho, d1.p_rho, h, star),
            hermite(s0.p_theta, d0.p_theta, s1.p_theta, d1.p_theta, h, star),
            hermite(s0.p_phi, d0.p_phi, s1.p_phi, d1.p_phi, h, star),
        };
        out.push_back(pt);
    }
    return out;
}

double second_order_transport_check(const VariationalParams& v, double t0, double t1, int steps) {
    if (!(t1 > t0)) throw Error("transport check needs t1 > t0");
    double w2 = v.omega2_sq.to_double();
    if (w2 <= 0.0) throw Error("transport check needs omega_2^2 > 0");
    double w = std::sqrt(w2);
    double lambda = v.lambda.to_double();

    // cos(w t) = 0 at t = (pi/2 + k pi)/w, sin(w t) = 0 at t = k pi/w
    const double pi = 3.14159265358979323846;
    auto hits_interval = [&](double offset) {
        double k_lo = std::ceil((t0 * w - offset) / pi - 1e-12);
        double t_hit = (offset + k_lo * pi) / w;
        return t_hit <= t1 + 1e-12;
    };
    if (hits_interval(pi / 2)) throw SingularityInInterval("cos(omega t) vanishes inside the interval");
    if (hits_interval(0.0)) throw SingularityInInterval("sin(omega t) vanishes inside the interval");

    GeneralODE2 alg = algebrize(RatFun(), build_variational_b_hat(v.lambda, v.omega2_sq),
                                HamiltonianChange::cosine(v.omega2_sq));

    // eta'' = (lambda / cos(w t) - w^2) eta
    auto t_rhs = [&](double t, double y, double yp, double& dy, double& dyp) {
        dy = yp;
        dyp = (lambda / std::cos(w * t) - w2) * y;
    };
    // y'' = -A(z) y' - B(z) y
    auto z_rhs = [&](double z, double y, double yp, double& dy, double& dyp) {
        dy = yp;
        dyp = -alg.a.eval_d(z) * yp - alg.b.eval_d(z) * y;
    };
    auto rk4_pair = [](auto rhs, double x, double& y, double& yp, double h) {
        double k1y, k1p, k2y, k2p, k3y, k3p, k4y, k4p;
        rhs(x, y, yp, k1y, k1p);
        rhs(x + h / 2, y + h / 2 * k1y, yp + h / 2 * k1p, k2y, k2p);
        rhs(x + h / 2, y + h / 2 * k2y, yp + h / 2 * k2p, k3y, k3p);
        rhs(x + h, y + h * k3y, yp + h * k3p, k4y, k4p);
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        yp += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    };

    double eta = 1.0, eta_p = 0.0;
    double yhat = eta;
    double yhat_p = eta_p / (-w * std::sin(w * t0));

    double max_err = 0.0;
    double ht = (t1 - t0) / steps;
    const int substeps = 4;
    for (int i = 0; i < steps; ++i) {
        double ta = t0 + i * ht;
        rk4_pair(t_rhs, ta, eta, eta_p, ht);
        double za = std::cos(w * ta), zb = std::cos(w * (ta + ht));
        double hz = (zb - za) / substeps;
        for (int j = 0; j < substeps; ++j) rk4_pair(z_rhs, za + j * hz, yhat, yhat_p, hz);
        max_err = std::max(max_err, std::fabs(eta - yhat));
    }
    return max_err;
}

namespace {

// cumulative trapezoid of f over [x_ref, x] with the given panel count
template <typename F>
std::vector<double> cumulative(const F& f, double x_ref, double x, int panels) {
    std::vector<double> acc(panels + 1, 0.0);
    double h = (x - x_ref) / panels;
    double prev = f(x_ref);
    for (int i = 1; i <= panels; ++i) {
        double cur = f(x_ref + i * h);
        acc[i] = acc[i - 1] + 0.5 * h * (prev + cur);
        prev = cur;
    }
    return acc;
}

}  // namespace

double eval_first_solution(const SecondSolutionRecipe& recipe, double x, double x_ref, int panels) {
    auto omega = [&](double u) { return recipe.omega.eval_d(u); };
    std::vector<double> w = cumulative(omega, x_ref, x, panels);
    return recipe.P.eval_d(x) * std::exp(w.back());
}

double eval_second_solution(const SecondSolutionRecipe& recipe, double x, double x_ref, int panels) {
    auto omega = [&](double u) { return recipe.omega.eval_d(u); };
    std::vector<double> w = cumulative(omega, x_ref, x, panels);
    double h = (x - x_ref) / panels;
    auto zeta1_at = [&](int i) { return recipe.P.eval_d(x_ref + i * h) * std::exp(w[i]); };
    double integral = 0.0;
    double prev = 1.0 / (zeta1_at(0) * zeta1_at(0));
    for (int i = 1; i <= panels; ++i) {
        double z = zeta1_at(i);
        double cur = 1.0 / (z * z);
        integral += 0.5 * h * (prev + cur);
        prev = cur;
    }
    return zeta1_at(panels) * integral;
}

}  // namespace liouville
