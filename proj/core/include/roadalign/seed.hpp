#pragma once

#include <vector>

#include "roadalign/alignment.hpp"
#include "roadalign/constraints.hpp"
#include "roadalign/terrain.hpp"

namespace roadalign {

// Deterministic constraint-satisfying starting design: IPs on the start-end
// line (moved to box centers where the boxes exclude the line), radii shrunk
// until curves fit, station elevations following the ground clipped into the
// grade-feasible band between the fixed terminals. Throws SeedingError naming
// the violated constraint when the procedure cannot produce a feasible
// design.
AlignmentDesign seed_alignment(const TerrainGrid& terrain, Vec3 start, Vec3 end,
                               const std::vector<int>& subdivisions,
                               const ConstraintConfig& config, double max_radius);

}  // namespace roadalign
