#include "liouville/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "liouville/expr.hpp"
#include "liouville/report.hpp"

namespace liouville {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCase4 = 10;
constexpr int kExitDegenerate = 11;
constexpr int kExitSurdFrequency = 12;
constexpr int kExitRhoCollapse = 13;

int coordinate_index(const std::string& name) {
    const std::vector<std::string> names = {"rho", "theta", "phi", "P_rho", "P_theta", "P_phi"};
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw Error("unknown coordinate '" + name + "' (expected rho, theta, phi, P_rho, P_theta, P_phi)");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    if (out.empty()) throw Error("empty rational list");
    return out;
}

int cmd_kovacic(const std::string& expr, bool as_json, std::ostream& out) {
    RatFun r = parse_ratfun(expr);
    KovacicAnalysis analysis = kovacic(NormalODE2{r});
    if (as_json)
        out << kovacic_report_json(analysis, r).dump(2) << "\n";
    else
        out << kovacic_report_text(analysis, r);
    return analysis.verdict.case_number == 4 ? kExitCase4 : kExitOk;
}

int cmd_algebrize(const std::string& bhat_expr, const std::string& ahat_expr,
                  const std::string& change_spec, bool as_json, std::ostream& out) {
    RatFun b_hat = parse_ratfun(bhat_expr);
    RatFun a_hat = ahat_expr.empty() ? RatFun() : parse_ratfun(ahat_expr);

    auto colon = change_spec.find(':');
    if (colon == std::string::npos) throw Error("--change expects kind:value, e.g. cosine:1 or custom:x^2");
    std::string kind = change_spec.substr(0, colon);
    std::string value = change_spec.substr(colon + 1);
    HamiltonianChange change = [&] {
        if (kind == "cosine") return HamiltonianChange::cosine(Rational::from_string(value));
        if (kind == "exponential") return HamiltonianChange::exponential(Rational::from_string(value));
        if (kind == "custom") return HamiltonianChange::custom(parse_ratfun(value));
        throw Error("unknown change kind '" + kind + "' (cosine, exponential, custom)");
    }();

    GeneralODE2 ode = algebrize(a_hat, b_hat, change);
    if (as_json)
        out << algebrize_report_json(ode).dump(2) << "\n";
    else
        out << "y'' + (" << to_text(ode.a) << ") y' + (" << to_text(ode.b) << ") y = 0\n";
    return kExitOk;
}

int cmd_analyze(const std::string& b, const std::string& c, const std::string& f,
                const std::string& B, bool as_json, std::ostream& out) {
    WilberforceReport rep = analyze_integrability(Rational::from_string(b), Rational::from_string(c),
                                                  Rational::from_string(f), Rational::from_string(B));
    if (as_json)
        out << wilberforce_report_json(rep).dump(2) << "\n";
    else
        out << wilberforce_report_text(rep);
    switch (rep.conclusion) {
        case Conclusion::degenerate: return kExitDegenerate;
        case Conclusion::non_integrable: return kExitCase4;
        default: return kExitOk;
    }
}

int cmd_simulate(const std::string& b, const std::string& c, const std::string& f,
                 const std::vector<double>& state, double t_end, double dt, const std::string& out_path,
                 const std::string& section_spec, const std::string& section_dir,
                 std::string section_out, std::ostream& out) {
    DimensionlessParams d{Rational(1), Rational::from_string(b), Rational::from_string(c),
                          Rational::from_string(f)};
    State s0{state[0], state[1], state[2], state[3], state[4], state[5]};
    Trajectory traj = integrate(d, s0, t_end, dt);

    std::ofstream file(out_path);
    if (!file) throw Error("cannot open output file " + out_path);
    write_trajectory_csv(file, traj);
    out << "wrote " << traj.states.size() << " rows to " << out_path << "\n";

    if (!section_spec.empty()) {
        auto eq = section_spec.find('=');
        if (eq == std::string::npos) throw Error("--section expects coord=value, e.g. theta=0");
        Section sec;
        sec.coordinate = coordinate_index(section_spec.substr(0, eq));
        sec.value = std::stod(section_spec.substr(eq + 1));
        if (section_dir == "up")
            sec.direction = +1;
        else if (section_dir == "down")
            sec.direction = -1;
        else if (section_dir == "both")
            sec.direction = 0;
        else
            throw Error("--section-direction expects up, down, or both");
        auto points = poincare_section(traj, d, sec);
        if (section_out.empty()) section_out = out_path + ".section.csv";
        std::ofstream sfile(section_out);
        if (!sfile) throw Error("cannot open output file " + section_out);
        write_section_csv(sfile, points);
        out << "wrote " << points.size() << " section points to " << section_out << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const std::string& b_list, const std::string& c_list, const std::string& f_list,
              const std::string& B, bool as_json, unsigned jobs, std::ostream& out) {
    std::vector<Rational> bs = parse_rational_list(b_list);
    std::vector<Rational> cs = parse_rational_list(c_list);
    std::vector<Rational> fs = parse_rational_list(f_list);
    Rational amp = Rational::from_string(B);

    struct Row {
        Rational b, c, f;
        std::string outcome;
        int case_number = 0;
        std::string omega2;
    };
    std::vector<std::tuple<Rational, Rational, Rational>> grid;
    for (const auto& b : bs)
        for (const auto& c : cs)
            for (const auto& f : fs) grid.emplace_back(b, c, f);

    auto run_one = [&amp](const std::tuple<Rational, Rational, Rational>& cell) {
        const auto& [b, c, f] = cell;
        Row row;
        row.b = b;
        row.c = c;
        row.f = f;
        try {
            WilberforceReport rep = analyze_integrability(b, c, f, amp);
            row.outcome = conclusion_str(rep.conclusion);
            row.case_number = rep.analysis ? rep.analysis->verdict.case_number : 0;
            row.omega2 = rep.modes.omega2_sq.str();
        } catch (const Error& e) {
            row.outcome = std::string("error: ") + e.what();
        }
        return row;
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Row> rows(grid.size());
    for (size_t base = 0; base < grid.size(); base += jobs) {
        size_t batch = std::min<size_t>(jobs, grid.size() - base);
        std::vector<std::future<Row>> futures;
        futures.reserve(batch);
        for (size_t i = 0; i < batch; ++i)
            futures.push_back(std::async(std::launch::async, run_one, grid[base + i]));
        for (size_t i = 0; i < batch; ++i) rows[base + i] = futures[i].get();
    }

    for (const Row& row : rows) {
        if (as_json) {
            nlohmann::json j{{"b", row.b.str()},           {"c", row.c.str()},
                             {"f", row.f.str()},           {"B", amp.str()},
                             {"omega2_sq", row.omega2},    {"outcome", row.outcome},
                             {"case", row.case_number}};
            out << j.dump() << "\n";
        } else {
            out << "b=" << row.b.str() << " c=" << row.c.str() << " f=" << row.f.str()
                << " omega2_sq=" << row.omega2 << " outcome=" << row.outcome;
            if (row.case_number) out << " case=" << row.case_number;
            out << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kovacic / Hamiltonian-algebrization toolkit with a Wilberforce spring-pendulum pipeline"};
    app.require_subcommand(1);

    std::string r_expr;
    bool kov_json = false;
    CLI::App* kov = app.add_subcommand("kovacic", "Decide Liouvillian solvability of xi'' = r xi");
    kov->add_option("--r", r_expr, "rational function r(x)")->required();
    kov->add_flag("--json", kov_json, "emit a JSON report");

    std::string bhat, ahat, change_spec;
    bool alg_json = false;
    CLI::App* alg = app.add_subcommand("algebrize", "Algebrize d^2y + a_hat dy + b_hat y = 0, d = sqrt(alpha(z)) d/dz");
    alg->add_option("--b-hat", bhat, "b_hat as a rational function of z (variable x)")->required();
    alg->add_option("--a-hat", ahat, "a_hat as a rational function of z (default 0)");
    alg->add_option("--change", change_spec, "cosine:w2 | exponential:m2 | custom:alpha(x)")->required();
    alg->add_flag("--json", alg_json, "emit a JSON report");

    CLI::App* wil = app.add_subcommand("wilberforce", "Wilberforce spring-pendulum pipeline");
    wil->require_subcommand(1);

    std::string wb, wc, wf, wB;
    bool ana_json = false;
    CLI::App* ana = wil->add_subcommand("analyze", "Run the non-integrability pipeline");
    ana->add_option("--b", wb, "torsional stiffness ratio (rational p/q)")->required();
    ana->add_option("--c", wc, "coupling (rational)")->required();
    ana->add_option("--f", wf, "(omega_p/omega_s)^2 (rational, nonzero)")->required();
    ana->add_option("--B", wB, "amplitude of the cosine solution (rational, nonzero)")->required();
    ana->add_flag("--json", ana_json, "emit a JSON report");

    std::string sb, sc, sf, out_path, section_spec, section_out;
    std::string section_dir = "up";
    std::vector<double> state;
    double t_end = 100.0, dt = 1e-3;
    CLI::App* sim = wil->add_subcommand("simulate", "Integrate the equations of motion (RK4)");
    sim->add_option("--b", sb, "torsional stiffness ratio (rational)")->required();
    sim->add_option("--c", sc, "coupling (rational)")->required();
    sim->add_option("--f", sf, "(omega_p/omega_s)^2 (rational)")->required();
    sim->add_option("--state", state, "initial rho theta phi P_rho P_theta P_phi")
        ->expected(6)
        ->required();
    sim->add_option("--t-end", t_end, "integration time (default 100)");
    sim->add_option("--dt", dt, "step size (default 1e-3)");
    sim->add_option("--out", out_path, "trajectory CSV path")->required();
    sim->add_option("--section", section_spec, "Poincare section, e.g. theta=0");
    sim->add_option("--section-direction", section_dir, "up | down | both (default up)");
    sim->add_option("--section-out", section_out, "section CSV path (default <out>.section.csv)");

    std::string gb, gc, gf, gB;
    bool sweep_json = false;
    unsigned jobs = 0;
    CLI::App* swp = app.add_subcommand("sweep", "Grid of analyze runs over b, c, f");
    swp->add_option("--b", gb, "comma-separated rationals")->required();
    swp->add_option("--c", gc, "comma-separated rationals")->required();
    swp->add_option("--f", gf, "comma-separated rationals")->required();
    swp->add_option("--B", gB, "amplitude (rational)")->required();
    swp->add_flag("--json", sweep_json, "emit one JSON document per row");
    swp->add_option("--jobs", jobs, "parallel workers (default: hardware)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (kov->parsed()) return cmd_kovacic(r_expr, kov_json, out);
        if (alg->parsed()) return cmd_algebrize(bhat, ahat, change_spec, alg_json, out);
        if (ana->parsed()) return cmd_analyze(wb, wc, wf, wB, ana_json, out);
        if (sim->parsed())
            return cmd_simulate(sb, sc, sf, state, t_end, dt, out_path, section_spec, section_dir,
                                section_out, out);
        if (swp->parsed()) return cmd_sweep(gb, gc, gf, gB, sweep_json, jobs, out);
    } catch (const SurdFrequency& e) {
        err << "error: " << e.what() << "\n";
        return kExitSurdFrequency;
    } catch (const RhoCollapse& e) {
        err << "error: " << e.what() << "\n";
        return kExitRhoCollapse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace liouville
