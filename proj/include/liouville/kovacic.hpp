#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liouville/ode.hpp"

namespace liouville {

enum class GroupLabel { borel_reducible, infinite_dihedral, finite_primitive, sl2 };
const char* group_label_str(GroupLabel g);

// Points are always ordered: finite poles ascending, infinity last.
// Choice vectors follow that order (+1/-1 signs in case 1, e-values in 2/3).
struct PointRef {
    bool at_infinity;
    Rational location;
    std::string str() const { return at_infinity ? "infinity" : location.str(); }
};

struct Case1Data {
    long n = 0;
    Poly P;
    RatFun omega;  // zeta_1 = P * exp(∫ omega)
    std::vector<long> signs;
};

struct Case2Data {
    long n = 0;
    Poly P;
    RatFun theta;
    RatFun phi;         // theta + P'/P
    RatFun quad_lin;    // omega^2 + quad_lin * omega + quad_const = 0
    RatFun quad_const;
    std::vector<long> e_choice;
};

struct Case3Data {
    int m = 0;
    long n = 0;
    Poly P;
    RatFun theta;
    Poly S;
    // omega solves sum_i omega_poly[i] omega^i = 0 with
    // omega_poly[i] = S^i P_i / (m-i)!, P_i the recursion chain
    std::vector<RatFun> omega_poly;
    std::vector<long> e_choice;
};

struct KovacicVerdict {
    int case_number = 4;
    GroupLabel group = GroupLabel::sl2;
    std::optional<Case1Data> case1;
    std::optional<Case2Data> case2;
    std::optional<Case3Data> case3;
};

// ---- step-by-step trace (replayable: every candidate attempted, in order) ----

struct Case1Point {
    PointRef point;
    int order = 0;
    std::string condition;  // c0..c3, inf1..inf3
    SurdSum alpha_plus, alpha_minus;
    RatFun sqrt_part;  // [sqrt r] at the point (zero unless c3/inf3)
};

struct EPoint {
    PointRef point;
    int order = 0;
    std::string condition;
    std::vector<long> e_set;  // sorted
};

struct DEntry {
    long n = 0;
    std::vector<long> choice;
};

struct Case1Attempt {
    long n = 0;
    std::vector<long> choice;
    RatFun omega;
    bool success = false;
    Poly P;
};
struct Case2Attempt {
    long n = 0;
    std::vector<long> choice;
    bool success = false;
    Poly P;
};
struct Case3Attempt {
    long n = 0;
    std::vector<long> choice;
    bool success = false;
    Poly P;
    Poly p_top;     // P_{m-1}
    Poly p_minus1;  // must vanish identically for success
};

struct Case1Trace {
    bool applicable = true;
    std::string why_not;
    std::vector<Case1Point> points;
    std::vector<DEntry> d_entries;
    std::vector<long> D;
    std::vector<Case1Attempt> attempts;
};
struct Case2Trace {
    bool applicable = true;
    std::string why_not;
    std::vector<EPoint> points;
    std::vector<DEntry> d_entries;
    std::vector<long> D;
    std::vector<Case2Attempt> attempts;
};
struct Case3Trace {
    int m = 0;
    bool applicable = true;
    std::string why_not;
    std::vector<EPoint> points;
    std::vector<DEntry> d_entries;
    std::vector<long> D;
    std::vector<Case3Attempt> attempts;
};

struct KovacicAnalysis {
    KovacicVerdict verdict;
    Case1Trace case1;
    Case2Trace case2;
    std::vector<Case3Trace> case3;  // m = 4, 6, 12 in attempt order
    double seconds = 0.0;
};

// Individual cases (Appendix-style steps 1-3 each). Deterministic: sign and
// e-tuple assignments are enumerated lexicographically, D ascending, the
// smallest degree n attempted first.
std::optional<Case1Data> run_case1(const NormalODE2& eq, Case1Trace* trace = nullptr);
std::optional<Case2Data> run_case2(const NormalODE2& eq, Case2Trace* trace = nullptr);
std::optional<Case3Data> run_case3(const NormalODE2& eq, int m, Case3Trace* trace = nullptr);

// Full algorithm: case 1, case 2, case 3 with m = 4, 6, 12, else case 4.
// Throws DegenerateEquation on r = 0 and NonRationalPoles on non-rational
// pole locations.
KovacicAnalysis kovacic(const NormalODE2& eq);

// zeta_2 = zeta_1 ∫ dx / zeta_1^2 for a case-1 solution zeta_1 = P e^{∫omega};
// symbolic data only, numeric evaluation lives in the dynamics module.
struct SecondSolutionRecipe {
    RatFun omega;
    Poly P;
};
SecondSolutionRecipe second_solution_factor(const Case1Data& c1);

// v = omega + P'/P satisfies v' + v^2 = r exactly.
bool riccati_check(const RatFun& omega, const Poly& P, const RatFun& r);

}  // namespace liouville
