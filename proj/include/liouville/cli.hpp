#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liouville {

// Exit codes (total over outcome categories):
//   0  success; for `kovacic`, a Liouvillian solution was found (cases 1-3)
//   2  input error: syntax errors, zero denominators, non-rational poles,
//      degenerate parameters/equations, non-rational drift, bad flags
//  10  case 4: no Liouvillian solutions / NonIntegrable conclusion
//  11  degenerate Wilberforce parameters (c^2 = 4b), no verdict
//  12  irrational omega_2^2 (pick parameters with a rational frequency)
//  13  rho <= 0 reached during simulation
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liouville
