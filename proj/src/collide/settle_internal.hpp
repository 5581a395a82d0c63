#pragma once

#include <vector>

#include "lcg/collide.hpp"

namespace lcg::detail {

/// True when every group is cyclic and no two of them can ever come within
/// Chebyshev distance 2 of each other.
bool never_interact(const std::vector<std::vector<Coord>>& groups, const std::vector<const CycleInfo*>& infos,
                    const CollideOptions& opts);

std::vector<CensusItem> census_of(const std::vector<std::vector<Coord>>& groups,
                                  const std::vector<const CycleInfo*>& infos);

}  // namespace lcg::detail
