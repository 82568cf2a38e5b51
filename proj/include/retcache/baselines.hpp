#pragma once

#include <cstdint>

#include "retcache/retention.hpp"

namespace retcache {

enum class BaselineKind { Popular, Random };

// Considers contents in descending aggregate popularity (ties toward the
// lower index) and gives each the initial count minimizing its z-row cost
// under the capacity left over, then expands retention schedules.
CachingPlan popular_plan(const ZTable& z, const Scenario& scenario,
                         const DemandMatrix& demand);

// Same per-content selection, but the order is drawn sequentially without
// replacement with probability proportional to aggregate popularity among
// the contents not yet considered. Deterministic given the seed.
CachingPlan random_plan(const ZTable& z, const Scenario& scenario,
                        const DemandMatrix& demand, std::uint64_t seed);

}  // namespace retcache
