#include "liouville/kovacic.hpp"

#include <chrono>
#include <functional>

#include "liouville/errors.hpp"
#include "liouville/linsolve.hpp"

namespace liouville {

const char* group_label_str(GroupLabel g) {
    switch (g) {
        case GroupLabel::borel_reducible: return "Borel-reducible";
        case GroupLabel::infinite_dihedral: return "infinite-dihedral";
        case GroupLabel::finite_primitive: return "finite-primitive";
        default: return "SL2";
    }
}

namespace {

Poly lcm_poly(const Poly& a, const Poly& b) {
    Poly g = gcd(a, b);
    return (a * b).div_exact(g).monic();
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// monic P of degree n with op(P) identically zero; op must be linear
std::optional<Poly> find_monic_kernel(long n, const std::function<Poly(const Poly&)>& op) {
    std::vector<Poly> images(n + 1);
    for (long j = 0; j <= n; ++j) images[j] = op(Poly::monomial(SurdSum(1), static_cast<int>(j)));
    if (n == 0) {
        if (images[0].is_zero()) return Poly(1);
        return std::nullopt;
    }
    int max_deg = -1;
    for (const Poly& im : images) max_deg = std::max(max_deg, im.degree());
    if (max_deg < 0) return Poly::monomial(SurdSum(1), static_cast<int>(n));  // operator vanished

    size_t rows = static_cast<size_t>(max_deg) + 1;
    std::vector<std::vector<SurdSum>> a(rows, std::vector<SurdSum>(n));
    std::vector<SurdSum> rhs(rows);
    for (size_t row = 0; row < rows; ++row) {
        for (long j = 0; j < n; ++j) a[row][j] = images[j].coeff(static_cast<int>(row));
        rhs[row] = -images[n].coeff(static_cast<int>(row));
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<SurdSum> coeffs(n + 1);
    for (long j = 0; j < n; ++j) coeffs[j] = (*sol)[j];
    coeffs[n] = SurdSum(1);
    return Poly::from_coeffs(std::move(coeffs));
}

// lexicographic odometer over per-point candidate counts, first point slowest
bool advance(std::vector<size_t>& idx, const std::vector<size_t>& sizes) {
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < sizes[i]) return true;
        idx[i] = 0;
    }
    return false;
}

std::optional<long> surd_as_long(const SurdSum& s) {
    auto z = s.as_integer();
    if (!z || !mpz_fits_slong_p(z->get_mpz_t())) return std::nullopt;
    return z->get_si();
}

// E-set for pole/infinity conditions of the form {base + k*step*sqrt(1+4b)}
void insert_integer_candidate(std::vector<long>& out, const SurdSum& cand) {
    if (auto v = surd_as_long(cand)) {
        if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
}

}  // namespace

// ---------------------------------------------------------------- case 1

std::optional<Case1Data> run_case1(const NormalODE2& eq, Case1Trace* trace) {
    Case1Trace local;
    Case1Trace& tr = trace ? *trace : local;
    tr = Case1Trace{};

    const RatFun& r = eq.r;
    PoleSpectrum spec = pole_spectrum(r);
    SurdSum one(1), four(4), half(Rational(1, 2));

    for (const auto& [c, order] : spec.finite_poles) {
        Case1Point pt;
        pt.point = {false, c};
        pt.order = order;
        if (order == 1) {
            pt.condition = "c1";
            pt.alpha_plus = pt.alpha_minus = one;
        } else if (order == 2) {
            pt.condition = "c2";
            SurdSum b = laurent_coeff_at_pole(r, c, -2);
            SurdSum s = (one + four * b).sqrt();
            pt.alpha_plus = (one + s) * half;
            pt.alpha_minus = (one - s) * half;
        } else if (order % 2 == 0) {
            pt.condition = "c3";
            SqrtAtPole sq = laurent_sqrt_at_pole(r, c, order / 2);
            pt.sqrt_part = sq.principal;
            pt.alpha_plus = (sq.b_next / sq.a + SurdSum(order / 2)) * half;
            pt.alpha_minus = (-(sq.b_next / sq.a) + SurdSum(order / 2)) * half;
        } else {
            tr.applicable = false;
            tr.why_not = "pole of odd order " + std::to_string(order) + " at " + c.str();
            return std::nullopt;
        }
        tr.points.push_back(std::move(pt));
    }

    {
        Case1Point pt;
        pt.point = {true, Rational(0)};
        pt.order = spec.order_at_infinity;
        int o = spec.order_at_infinity;
        if (o > 2) {
            pt.condition = "inf1";
            pt.alpha_plus = SurdSum(0);
            pt.alpha_minus = one;
        } else if (o == 2) {
            pt.condition = "inf2";
            SurdSum b = coeff_at_infinity(r, -2);
            SurdSum s = (one + four * b).sqrt();
            pt.alpha_plus = (one + s) * half;
            pt.alpha_minus = (one - s) * half;
        } else if (o % 2 == 0) {
            pt.condition = "inf3";
            SqrtAtInfinity sq = laurent_sqrt_at_infinity(r, -o / 2);
            pt.sqrt_part = RatFun(sq.principal);
            pt.alpha_plus = (sq.b_next / sq.a - SurdSum(-o / 2)) * half;
            pt.alpha_minus = (-(sq.b_next / sq.a) - SurdSum(-o / 2)) * half;
        } else {
            tr.applicable = false;
            tr.why_not = "order at infinity " + std::to_string(o) + " is odd";
            return std::nullopt;
        }
        tr.points.push_back(std::move(pt));
    }

    // step 2: D = { n in Z>=0 : n = alpha_inf^eps - sum_c alpha_c^eps }
    const size_t np = tr.points.size();
    std::vector<size_t> idx(np, 0);
    std::vector<size_t> sizes(np, 2);  // 0 -> +, 1 -> -
    do {
        SurdSum val;
        for (size_t i = 0; i < np; ++i) {
            const Case1Point& p = tr.points[i];
            SurdSum alpha = idx[i] == 0 ? p.alpha_plus : p.alpha_minus;
            val = p.point.at_infinity ? val + alpha : val - alpha;
        }
        if (auto n = surd_as_long(val); n && *n >= 0) {
            DEntry d;
            d.n = *n;
            for (size_t i = 0; i < np; ++i) d.choice.push_back(idx[i] == 0 ? 1 : -1);
            tr.d_entries.push_back(std::move(d));
        }
    } while (advance(idx, sizes));

    std::stable_sort(tr.d_entries.begin(), tr.d_entries.end(),
                     [](const DEntry& a, const DEntry& b) { return a.n < b.n; });
    for (const DEntry& d : tr.d_entries)
        if (tr.D.empty() || tr.D.back() != d.n) tr.D.push_back(d.n);

    // step 3: omega per assignment, then a monic P_n with
    // P'' + 2 omega P' + (omega' + omega^2 - r) P = 0
    for (const DEntry& d : tr.d_entries) {
        RatFun omega;
        for (size_t i = 0; i < np; ++i) {
            const Case1Point& p = tr.points[i];
            SurdSum sign(d.choice[i]);
            if (p.point.at_infinity) {
                omega += p.sqrt_part * RatFun(sign);
            } else {
                SurdSum alpha = d.choice[i] == 1 ? p.alpha_plus : p.alpha_minus;
                omega += p.sqrt_part * RatFun(sign) +
                         RatFun(Poly(alpha)) / RatFun(Poly::x() - Poly(p.point.location));
            }
        }

        RatFun q = omega.derivative() + omega * omega - r;
        Poly t = lcm_poly(omega.den(), q.den());
        Poly a2 = (omega.num() * t.div_exact(omega.den())).scaled(SurdSum(2));
        Poly b0 = q.num() * t.div_exact(q.den());
        auto op = [&](const Poly& p) { return t * p.derivative().derivative() + a2 * p.derivative() + b0 * p; };

        Case1Attempt attempt;
        attempt.n = d.n;
        attempt.choice = d.choice;
        attempt.omega = omega;
        auto P = find_monic_kernel(d.n, op);
        attempt.success = P.has_value();
        if (P) attempt.P = *P;
        tr.attempts.push_back(attempt);
        if (P) {
            Case1Data out;
            out.n = d.n;
            out.P = *P;
            out.omega = omega;
            out.signs = d.choice;
            return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- case 2

std::optional<Case2Data> run_case2(const NormalODE2& eq, Case2Trace* trace) {
    Case2Trace local;
    Case2Trace& tr = trace ? *trace : local;
    tr = Case2Trace{};

    const RatFun& r = eq.r;
    PoleSpectrum spec = pole_spectrum(r);
    SurdSum one(1), four(4);

    for (const auto& [c, order] : spec.finite_poles) {
        EPoint pt;
        pt.point = {false, c};
        pt.order = order;
        if (order == 1) {
            pt.condition = "c1";
            pt.e_set = {4};
        } else if (order == 2) {
            pt.condition = "c2";
            SurdSum b = laurent_coeff_at_pole(r, c, -2);
            SurdSum s = (one + four * b).sqrt();
            for (long k : {0L, 2L, -2L}) insert_integer_candidate(pt.e_set, SurdSum(2) + SurdSum(k) * s);
        } else {
            pt.condition = "c3";
            pt.e_set = {order};
        }
        std::sort(pt.e_set.begin(), pt.e_set.end());
        tr.points.push_back(std::move(pt));
    }

    {
        EPoint pt;
        pt.point = {true, Rational(0)};
        pt.order = spec.order_at_infinity;
        int o = spec.order_at_infinity;
        if (o > 2) {
            pt.condition = "inf1";
            pt.e_set = {0, 2, 4};
        } else if (o == 2) {
            pt.condition = "inf2";
            SurdSum b = coeff_at_infinity(r, -2);
            SurdSum s = (one + four * b).sqrt();
            for (long k : {0L, 2L, -2L}) insert_integer_candidate(pt.e_set, SurdSum(2) + SurdSum(k) * s);
        } else {
            pt.condition = "inf3";
            pt.e_set = {o};
        }
        std::sort(pt.e_set.begin(), pt.e_set.end());
        tr.points.push_back(std::move(pt));
    }

    // step 2: D = { (e_inf - sum e_c)/2 in Z>=0 }
    const size_t np = tr.points.size();
    std::vector<size_t> sizes(np), idx(np, 0);
    for (size_t i = 0; i < np; ++i) sizes[i] = tr.points[i].e_set.size();
    do {
        long acc = 0;
        for (size_t i = 0; i < np; ++i) {
            long e = tr.points[i].e_set[idx[i]];
            acc += tr.points[i].point.at_infinity ? e : -e;
        }
        if (acc >= 0 && acc % 2 == 0) {
            DEntry d;
            d.n = acc / 2;
            for (size_t i = 0; i < np; ++i) d.choice.push_back(tr.points[i].e_set[idx[i]]);
            tr.d_entries.push_back(std::move(d));
        }
    } while (advance(idx, sizes));

    std::stable_sort(tr.d_entries.begin(), tr.d_entries.end(),
                     [](const DEntry& a, const DEntry& b) { return a.n < b.n; });
    for (const DEntry& d : tr.d_entries)
        if (tr.D.empty() || tr.D.back() != d.n) tr.D.push_back(d.n);

    // step 3: theta = (1/2) sum e_c/(x - c); monic P_n with the third-order
    // relation; then omega solves omega^2 - phi omega + (phi' + phi^2 - 2r)/2 = 0
    for (const DEntry& d : tr.d_entries) {
        RatFun theta;
        for (size_t i = 0; i < np; ++i) {
            const EPoint& p = tr.points[i];
            if (p.point.at_infinity) continue;
            theta += RatFun(Poly(SurdSum(Rational(d.choice[i], 2)))) /
                     RatFun(Poly::x() - Poly(p.point.location));
        }

        RatFun th_p = theta.derivative();
        RatFun c2 = RatFun(3) * theta;
        RatFun c1 = RatFun(3) * th_p + RatFun(3) * theta * theta - RatFun(4) * r;
        RatFun c0 = th_p.derivative() + RatFun(3) * theta * th_p + theta * theta * theta -
                    RatFun(4) * r * theta - RatFun(2) * r.derivative();
        Poly t = lcm_poly(lcm_poly(c2.den(), c1.den()), c0.den());
        Poly a2 = c2.num() * t.div_exact(c2.den());
        Poly a1 = c1.num() * t.div_exact(c1.den());
        Poly a0 = c0.num() * t.div_exact(c0.den());
        auto op = [&](const Poly& p) {
            return t * p.derivative().derivative().derivative() + a2 * p.derivative().derivative() +
                   a1 * p.derivative() + a0 * p;
        };

        Case2Attempt attempt;
        attempt.n = d.n;
        attempt.choice = d.choice;
        auto P = find_monic_kernel(d.n, op);
        attempt.success = P.has_value();
        if (P) attempt.P = *P;
        tr.attempts.push_back(attempt);
        if (P) {
            Case2Data out;
            out.n = d.n;
            out.P = *P;
            out.theta = theta;
            out.phi = theta + RatFun(P->derivative()) / RatFun(*P);
            // the two conjugate Riccati roots sum to phi, so the quadratic they
            // satisfy is omega^2 - phi omega + (phi' + phi^2 - 2r)/2 = 0
            out.quad_lin = -out.phi;
            out.quad_const = (out.phi.derivative() + out.phi * out.phi - RatFun(2) * r) *
                             RatFun(Rational(1, 2));
            out.e_choice = d.choice;
            return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- case 3

std::optional<Case3Data> run_case3(const NormalODE2& eq, int m, Case3Trace* trace) {
    Case3Trace local;
    Case3Trace& tr = trace ? *trace : local;
    tr = Case3Trace{};
    tr.m = m;
    if (m != 4 && m != 6 && m != 12) throw Error("case 3 expects m in {4, 6, 12}");

    const RatFun& r = eq.r;
    PoleSpectrum spec = pole_spectrum(r);
    SurdSum one(1), four(4);

    for (const auto& [c, order] : spec.finite_poles) {
        if (order > 2) {
            tr.applicable = false;
            tr.why_not = "pole of order " + std::to_string(order) + " > 2 at " + c.str();
            return std::nullopt;
        }
    }
    if (spec.order_at_infinity < 2) {
        tr.applicable = false;
        tr.why_not = "order at infinity " + std::to_string(spec.order_at_infinity) + " < 2";
        return std::nullopt;
    }

    auto e_set_order2 = [&](const SurdSum& b) {
        std::vector<long> e;
        SurdSum s = (one + four * b).sqrt();
        for (long k = 0; k <= m / 2; ++k) {
            insert_integer_candidate(e, SurdSum(6) + SurdSum(Rational(12 * k, m)) * s);
            insert_integer_candidate(e, SurdSum(6) - SurdSum(Rational(12 * k, m)) * s);
        }
        std::sort(e.begin(), e.end());
        return e;
    };

    for (const auto& [c, order] : spec.finite_poles) {
        EPoint pt;
        pt.point = {false, c};
        pt.order = order;
        if (order == 1) {
            pt.condition = "c1";
            pt.e_set = {12};
        } else {
            pt.condition = "c2";
            pt.e_set = e_set_order2(laurent_coeff_at_pole(r, c, -2));
        }
        tr.points.push_back(std::move(pt));
    }
    {
        EPoint pt;
        pt.point = {true, Rational(0)};
        pt.order = spec.order_at_infinity;
        pt.condition = "inf";
        pt.e_set = e_set_order2(spec.order_at_infinity == 2 ? coeff_at_infinity(r, -2) : SurdSum(0));
        tr.points.push_back(std::move(pt));
    }

    // step 2: D = { (m/12)(e_inf - sum e_c) in Z>=0 }
    const size_t np = tr.points.size();
    std::vector<size_t> sizes(np), idx(np, 0);
    for (size_t i = 0; i < np; ++i) sizes[i] = tr.points[i].e_set.size();
    do {
        long acc = 0;
        for (size_t i = 0; i < np; ++i) {
            long e = tr.points[i].e_set[idx[i]];
            acc += tr.points[i].point.at_infinity ? e : -e;
        }
        long num = static_cast<long>(m) * acc;
        if (num >= 0 && num % 12 == 0) {
            DEntry d;
            d.n = num / 12;
            for (size_t i = 0; i < np; ++i) d.choice.push_back(tr.points[i].e_set[idx[i]]);
            tr.d_entries.push_back(std::move(d));
        }
    } while (advance(idx, sizes));

    std::stable_sort(tr.d_entries.begin(), tr.d_entries.end(),
                     [](const DEntry& a, const DEntry& b) { return a.n < b.n; });
    for (const DEntry& d : tr.d_entries)
        if (tr.D.empty() || tr.D.back() != d.n) tr.D.push_back(d.n);

    // step 3: descending recursion; success iff P_{-1} vanishes identically
    std::vector<Rational> pole_locs;
    for (const auto& [c, order] : spec.finite_poles) pole_locs.push_back(c);
    Poly S = Poly::from_roots(pole_locs);
    Poly S_prime = S.derivative();
    RatFun s2r = RatFun(S * S) * r;
    if (!s2r.is_poly()) throw Error("S^2 r expected to be a polynomial in case 3");
    Poly S2r = s2r.num();

    for (const DEntry& d : tr.d_entries) {
        RatFun theta;
        for (size_t i = 0; i < np; ++i) {
            const EPoint& p = tr.points[i];
            if (p.point.at_infinity) continue;
            theta += RatFun(Poly(SurdSum(Rational(static_cast<long>(m) * d.choice[i], 12)))) /
                     RatFun(Poly::x() - Poly(p.point.location));
        }
        RatFun s_theta_rf = RatFun(S) * theta;
        if (!s_theta_rf.is_poly()) throw Error("S*theta expected to be a polynomial in case 3");
        Poly S_theta = s_theta_rf.num();

        // chain[i+1] holds P_i for i in [-1, m]; P_m = P and the sign of the
        // middle term follow Kovacic's original relation (the top step then
        // reads P_{m-1} = -S theta P, matching the worked trace values)
        auto recursion = [&](const Poly& P) {
            std::vector<Poly> chain(m + 2);
            chain[m + 1] = P;
            for (int i = m; i >= 0; --i) {
                const Poly& pi = chain[i + 1];
                Poly next = -(S * pi.derivative()) + ((S_prime.scaled(SurdSum(m - i)) - S_theta) * pi);
                if (i + 2 <= m + 1)
                    next -= (S2r * chain[i + 2]).scaled(SurdSum(static_cast<long>(m - i) * (i + 1)));
                chain[i] = next;
            }
            return chain;
        };

        Case3Attempt attempt;
        attempt.n = d.n;
        attempt.choice = d.choice;

        std::optional<Poly> candidate;
        if (d.n == 0) {
            candidate = Poly(1);
        } else {
            // P_{-1} is linear in P; run the recursion on the monomial basis
            std::vector<Poly> pm1(d.n + 1);
            for (long j = 0; j <= d.n; ++j)
                pm1[j] = recursion(Poly::monomial(SurdSum(1), static_cast<int>(j))).front();
            int max_deg = -1;
            for (const Poly& p : pm1) max_deg = std::max(max_deg, p.degree());
            if (max_deg < 0) {
                candidate = Poly::monomial(SurdSum(1), static_cast<int>(d.n));
            } else {
                size_t rows = static_cast<size_t>(max_deg) + 1;
                std::vector<std::vector<SurdSum>> a(rows, std::vector<SurdSum>(d.n));
                std::vector<SurdSum> rhs(rows);
                for (size_t row = 0; row < rows; ++row) {
                    for (long j = 0; j < d.n; ++j) a[row][j] = pm1[j].coeff(static_cast<int>(row));
                    rhs[row] = -pm1[d.n].coeff(static_cast<int>(row));
                }
                if (auto sol = solve_linear(std::move(a), std::move(rhs))) {
                    std::vector<SurdSum> coeffs(d.n + 1);
                    for (long j = 0; j < d.n; ++j) coeffs[j] = (*sol)[j];
                    coeffs[d.n] = SurdSum(1);
                    candidate = Poly::from_coeffs(std::move(coeffs));
                }
            }
        }

        std::vector<Poly> chain =
            recursion(candidate ? *candidate : Poly::monomial(SurdSum(1), static_cast<int>(d.n)));
        attempt.P = candidate ? *candidate : Poly::monomial(SurdSum(1), static_cast<int>(d.n));
        attempt.p_top = chain[m];
        attempt.p_minus1 = chain.front();
        attempt.success = candidate.has_value() && chain.front().is_zero();
        tr.attempts.push_back(attempt);

        if (attempt.success) {
            Case3Data out;
            out.m = m;
            out.n = d.n;
            out.P = *candidate;
            out.theta = theta;
            out.S = S;
            out.e_choice = d.choice;
            // omega satisfies sum_i S^i P_i omega^i / (m-i)! = 0 with P_i the chain
            for (int i = 0; i <= m; ++i)
                out.omega_poly.push_back(RatFun(S.pow(i) * chain[i + 1]) *
                                         RatFun(Rational(1, factorial(m - i))));
            return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- driver

KovacicAnalysis kovacic(const NormalODE2& eq) {
    if (eq.r.is_zero()) throw DegenerateEquation();
    pole_spectrum(eq.r);  // NonRationalPoles surfaces before any case runs

    auto t0 = std::chrono::steady_clock::now();
    KovacicAnalysis out;

    if (auto c1 = run_case1(eq, &out.case1)) {
        out.verdict.case_number = 1;
        out.verdict.group = GroupLabel::borel_reducible;
        out.verdict.case1 = std::move(c1);
    } else if (auto c2 = run_case2(eq, &out.case2)) {
        out.verdict.case_number = 2;
        out.verdict.group = GroupLabel::infinite_dihedral;
        out.verdict.case2 = std::move(c2);
    } else {
        bool solved = false;
        for (int m : {4, 6, 12}) {
            out.case3.emplace_back();
            if (auto c3 = run_case3(eq, m, &out.case3.back())) {
                out.verdict.case_number = 3;
                out.verdict.group = GroupLabel::finite_primitive;
                out.verdict.case3 = std::move(c3);
                solved = true;
                break;
            }
        }
        if (!solved) {
            out.verdict.case_number = 4;
            out.verdict.group = GroupLabel::sl2;
        }
    }

    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

SecondSolutionRecipe second_solution_factor(const Case1Data& c1) { return {c1.omega, c1.P}; }

bool riccati_check(const RatFun& omega, const Poly& P, const RatFun& r) {
    RatFun v = omega + RatFun(P.derivative()) / RatFun(P);
    return v.derivative() + v * v == r;
}

}  // namespace liouville
