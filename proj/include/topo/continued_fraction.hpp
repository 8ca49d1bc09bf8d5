#pragma once

#include <vector>

#include "topo/rational.hpp"

namespace topo {

/// Value of a0 + 1/(a1 + 1/(... + 1/ak)). A zero tail mid-fold passes
/// through infinity and continues consistently; infinity is a legal result.
ExtendedSlope cf_fold(const std::vector<long long>& seq);

/// Floor-convention expansion: a0 = floor(r), all later partial quotients
/// are >= 1. Satisfies cf_fold(cf_expand(r)) == r for every finite r.
/// Rejects infinity.
std::vector<long long> cf_expand(const ExtendedSlope& r);

}  // namespace topo
