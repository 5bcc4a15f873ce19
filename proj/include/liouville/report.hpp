#pragma once

#include <json.hpp>

#include "liouville/dynamics.hpp"
#include "liouville/kovacic.hpp"
#include "liouville/wilberforce.hpp"

namespace liouville {

// Machine-readable reports. Every document carries the four stable fields
// {verdict, case, trace, timing}; extra fields depend on the subcommand.
nlohmann::json kovacic_report_json(const KovacicAnalysis& analysis, const RatFun& r);
std::string kovacic_report_text(const KovacicAnalysis& analysis, const RatFun& r);

nlohmann::json wilberforce_report_json(const WilberforceReport& report);
std::string wilberforce_report_text(const WilberforceReport& report);

nlohmann::json algebrize_report_json(const GeneralODE2& ode);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_section_csv(std::ostream& out, const std::vector<SectionPoint>& points);

}  // namespace liouville
