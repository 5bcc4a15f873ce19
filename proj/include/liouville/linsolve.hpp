#pragma once

#include <optional>
#include <vector>

#include "liouville/surd.hpp"

namespace liouville {

// Exact Gaussian elimination over the surd field. Solves A x = b for any
// shape; free variables are set to zero. nullopt when inconsistent.
std::optional<std::vector<SurdSum>> solve_linear(std::vector<std::vector<SurdSum>> a,
                                                 std::vector<SurdSum> b);

}  // namespace liouville
