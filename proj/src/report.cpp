#include "liouville/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "liouville/expr.hpp"

namespace liouville {

using nlohmann::json;

namespace {

json point_json(const PointRef& p) { return p.str(); }

json choice_json(const std::vector<long>& choice, bool signs) {
    json arr = json::array();
    for (long v : choice) {
        if (signs)
            arr.push_back(v > 0 ? "+" : "-");
        else
            arr.push_back(v);
    }
    return arr;
}

json case1_json(const Case1Trace& tr) {
    json j;
    j["case"] = 1;
    j["applicable"] = tr.applicable;
    if (!tr.applicable) j["why_not"] = tr.why_not;
    json points = json::array();
    for (const auto& p : tr.points) {
        json pj;
        pj["point"] = point_json(p.point);
        pj["order"] = p.order;
        pj["condition"] = p.condition;
        pj["alpha_plus"] = p.alpha_plus.str();
        pj["alpha_minus"] = p.alpha_minus.str();
        if (!p.sqrt_part.is_zero()) pj["sqrt_part"] = to_text(p.sqrt_part);
        points.push_back(pj);
    }
    j["points"] = points;
    j["D"] = tr.D;
    json entries = json::array();
    for (const auto& d : tr.d_entries)
        entries.push_back({{"n", d.n}, {"choice", choice_json(d.choice, true)}});
    j["d_entries"] = entries;
    json attempts = json::array();
    for (const auto& a : tr.attempts) {
        json aj;
        aj["n"] = a.n;
        aj["choice"] = choice_json(a.choice, true);
        aj["omega"] = to_text(a.omega);
        aj["success"] = a.success;
        if (a.success) aj["P"] = to_text(a.P);
        attempts.push_back(aj);
    }
    j["attempts"] = attempts;
    return j;
}

json epoints_json(const std::vector<EPoint>& pts) {
    json points = json::array();
    for (const auto& p : pts) {
        json pj;
        pj["point"] = point_json(p.point);
        pj["order"] = p.order;
        pj["condition"] = p.condition;
        pj["E"] = p.e_set;
        points.push_back(pj);
    }
    return points;
}

json case2_json(const Case2Trace& tr) {
    json j;
    j["case"] = 2;
    j["applicable"] = tr.applicable;
    if (!tr.applicable) j["why_not"] = tr.why_not;
    j["points"] = epoints_json(tr.points);
    j["D"] = tr.D;
    json entries = json::array();
    for (const auto& d : tr.d_entries)
        entries.push_back({{"n", d.n}, {"choice", choice_json(d.choice, false)}});
    j["d_entries"] = entries;
    json attempts = json::array();
    for (const auto& a : tr.attempts) {
        json aj;
        aj["n"] = a.n;
        aj["choice"] = choice_json(a.choice, false);
        aj["success"] = a.success;
        if (a.success) aj["P"] = to_text(a.P);
        attempts.push_back(aj);
    }
    j["attempts"] = attempts;
    return j;
}

json case3_json(const Case3Trace& tr) {
    json j;
    j["case"] = 3;
    j["m"] = tr.m;
    j["applicable"] = tr.applicable;
    if (!tr.applicable) j["why_not"] = tr.why_not;
    j["points"] = epoints_json(tr.points);
    j["D"] = tr.D;
    json entries = json::array();
    for (const auto& d : tr.d_entries)
        entries.push_back({{"n", d.n}, {"choice", choice_json(d.choice, false)}});
    j["d_entries"] = entries;
    json attempts = json::array();
    for (const auto& a : tr.attempts) {
        json aj;
        aj["n"] = a.n;
        aj["choice"] = choice_json(a.choice, false);
        aj["success"] = a.success;
        aj["p_top"] = to_text(a.p_top);
        aj["p_minus1_zero"] = a.p_minus1.is_zero();
        attempts.push_back(aj);
    }
    j["attempts"] = attempts;
    return j;
}

// cases run in order, so a case-1 verdict means case 2 was never attempted
json trace_json(const KovacicAnalysis& an) {
    json trace = json::array();
    trace.push_back(case1_json(an.case1));
    if (an.verdict.case_number >= 2) trace.push_back(case2_json(an.case2));
    for (const auto& c3 : an.case3) trace.push_back(case3_json(c3));
    return trace;
}

std::string solution_text(const KovacicVerdict& v) {
    switch (v.case_number) {
        case 1:
            return "zeta_1 = (" + to_text(v.case1->P) + ") * exp(Int " + to_text(v.case1->omega) + " dx)";
        case 2:
            return "zeta_1 = exp(Int omega dx), omega^2 + (" + to_text(v.case2->quad_lin) +
                   ")*omega + (" + to_text(v.case2->quad_const) + ") = 0";
        case 3:
            return "zeta_1 = exp(Int omega dx), omega a root of the degree-" +
                   std::to_string(v.case3->m) + " polynomial sum_i S^i P omega^i / (m-i)!";
        default:
            return "no Liouvillian solutions";
    }
}

}  // namespace

json kovacic_report_json(const KovacicAnalysis& an, const RatFun& r) {
    json j;
    j["verdict"] = group_label_str(an.verdict.group);
    j["case"] = an.verdict.case_number;
    j["trace"] = trace_json(an);
    j["timing"] = {{"seconds", an.seconds}};
    j["r"] = to_text(r);
    j["solution"] = solution_text(an.verdict);
    return j;
}

std::string kovacic_report_text(const KovacicAnalysis& an, const RatFun& r) {
    std::ostringstream out;
    out << "r = " << to_text(r) << "\n";
    auto show_D = [&out](const std::vector<long>& D) {
        out << "D = {";
        for (size_t i = 0; i < D.size(); ++i) out << (i ? "," : "") << D[i];
        out << "}\n";
    };

    const Case1Trace& c1 = an.case1;
    out << "case 1: ";
    if (!c1.applicable) {
        out << "not applicable (" << c1.why_not << ")\n";
    } else {
        out << "\n";
        for (const auto& p : c1.points)
            out << "  " << p.point.str() << " (" << p.condition << "): alpha+ = " << p.alpha_plus.str()
                << ", alpha- = " << p.alpha_minus.str() << "\n";
        out << "  ";
        show_D(c1.D);
        for (const auto& a : c1.attempts) {
            out << "  n=" << a.n << " eps=(";
            for (size_t i = 0; i < a.choice.size(); ++i)
                out << (i ? "," : "") << (a.choice[i] > 0 ? "+" : "-");
            out << ") omega=" << to_text(a.omega) << " -> "
                << (a.success ? "P = " + to_text(a.P) : "no monic P_n satisfies the relation") << "\n";
        }
    }

    if (an.verdict.case_number < 2) {
        out << "verdict: case " << an.verdict.case_number << ", Galois group "
            << group_label_str(an.verdict.group) << "\n"
            << solution_text(an.verdict) << "\n";
        return out.str();
    }
    const Case2Trace& c2 = an.case2;
    out << "case 2: ";
    if (!c2.applicable) {
        out << "not applicable (" << c2.why_not << ")\n";
    } else {
        out << "\n";
        for (const auto& p : c2.points) {
            out << "  E_" << p.point.str() << " = {";
            for (size_t i = 0; i < p.e_set.size(); ++i) out << (i ? "," : "") << p.e_set[i];
            out << "}\n";
        }
        out << "  ";
        show_D(c2.D);
        for (const auto& a : c2.attempts)
            out << "  n=" << a.n << " -> "
                << (a.success ? "P = " + to_text(a.P) : "no monic P_n satisfies the relation") << "\n";
    }

    for (const auto& c3 : an.case3) {
        out << "case 3 (m=" << c3.m << "): ";
        if (!c3.applicable) {
            out << "not applicable (" << c3.why_not << ")\n";
            continue;
        }
        out << "\n";
        for (const auto& p : c3.points) {
            out << "  E_" << p.point.str() << " = {";
            for (size_t i = 0; i < p.e_set.size(); ++i) out << (i ? "," : "") << p.e_set[i];
            out << "}\n";
        }
        out << "  ";
        show_D(c3.D);
        for (const auto& a : c3.attempts)
            out << "  n=" << a.n << " P_(m-1) = " << to_text(a.p_top) << " -> P_(-1) "
                << (a.p_minus1.is_zero() ? "= 0" : "not identically zero") << "\n";
    }

    out << "verdict: case " << an.verdict.case_number << ", Galois group " << group_label_str(an.verdict.group)
        << "\n"
        << solution_text(an.verdict) << "\n";
    return out.str();
}

json wilberforce_report_json(const WilberforceReport& rep) {
    json j;
    j["parameters"] = {{"b", rep.b.str()}, {"c", rep.c.str()}, {"f", rep.f.str()}, {"B", rep.B.str()}};
    j["omega1_sq"] = rep.modes.omega1_sq.str();
    j["omega2_sq"] = rep.modes.omega2_sq.str();
    j["conclusion"] = conclusion_str(rep.conclusion);
    if (rep.conclusion == Conclusion::degenerate) {
        j["verdict"] = "Degenerate";
        j["case"] = 0;
        j["trace"] = json::array();
        j["timing"] = {{"seconds", 0.0}};
        return j;
    }
    j["lambda"] = rep.lambda->str();
    j["heun"] = {{"a", rep.heun->a.str()},         {"gamma", rep.heun->gamma.str()},
                 {"delta", rep.heun->delta.str()}, {"epsilon", rep.heun->epsilon.str()},
                 {"mu", rep.heun->mu.str()},       {"beta", rep.heun->beta.str()},
                 {"q", rep.heun->q.str()}};
    j["r"] = to_text(rep.variational->r);
    j["verdict"] = group_label_str(rep.analysis->verdict.group);
    j["case"] = rep.analysis->verdict.case_number;
    j["trace"] = trace_json(*rep.analysis);
    j["timing"] = {{"seconds", rep.analysis->seconds}};
    return j;
}

std::string wilberforce_report_text(const WilberforceReport& rep) {
    std::ostringstream out;
    out << "parameters: b = " << rep.b.str() << ", c = " << rep.c.str() << ", f = " << rep.f.str()
        << ", B = " << rep.B.str() << "\n";
    out << "omega_1^2 = " << rep.modes.omega1_sq.str() << ", omega_2^2 = " << rep.modes.omega2_sq.str()
        << "\n";
    if (rep.conclusion == Conclusion::degenerate) {
        out << "c^2 = 4b: omega_2 = 0, the theorem hypothesis fails; no verdict\n";
        out << "conclusion: Degenerate\n";
        return out.str();
    }
    out << "lambda = f/B = " << rep.lambda->str() << "\n";
    out << "Heun parameters: a = " << rep.heun->a.str() << ", gamma = " << rep.heun->gamma.str()
        << ", delta = " << rep.heun->delta.str() << ", epsilon = " << rep.heun->epsilon.str()
        << ", mu = " << rep.heun->mu.str() << ", beta = " << rep.heun->beta.str()
        << ", q = " << rep.heun->q.str() << "\n";
    out << kovacic_report_text(*rep.analysis, rep.variational->r);
    out << "conclusion: " << conclusion_str(rep.conclusion) << "\n";
    return out.str();
}

json algebrize_report_json(const GeneralODE2& ode) {
    json j;
    j["a"] = to_text(ode.a);
    j["b"] = to_text(ode.b);
    j["equation"] = "y'' + (" + to_text(ode.a) + ") y' + (" + to_text(ode.b) + ") y = 0";
    return j;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,rho,theta,phi,P_rho,P_theta,P_phi,H\n";
    for (size_t i = 0; i < traj.states.size(); ++i) {
        const State& s = traj.states[i];
        out << fmt17(traj.times[i]) << ',' << fmt17(s.rho) << ',' << fmt17(s.theta) << ','
            << fmt17(s.phi) << ',' << fmt17(s.p_rho) << ',' << fmt17(s.p_theta) << ','
            << fmt17(s.p_phi) << ',' << fmt17(traj.energy[i]) << '\n';
    }
}

void write_section_csv(std::ostream& out, const std::vector<SectionPoint>& points) {
    out << "t,rho,theta,phi,P_rho,P_theta,P_phi,direction\n";
    for (const SectionPoint& p : points) {
        out << fmt17(p.t) << ',' << fmt17(p.state.rho) << ',' << fmt17(p.state.theta) << ','
            << fmt17(p.state.phi) << ',' << fmt17(p.state.p_rho) << ',' << fmt17(p.state.p_theta)
            << ',' << fmt17(p.state.p_phi) << ',' << p.direction << '\n';
    }
}

}  // namespace liouville
