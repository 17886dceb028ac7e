#pragma once

#include "crossforge/cap_search.hpp"
#include "crossforge/layer_count.hpp"
#include "crossforge/scene.hpp"
#include "crossforge/schedules.hpp"

namespace crossforge {

/// K_m x C_n on a cylinder of period n: column j at x = j, ring t at y = t,
/// vertex i_{j,t} of the schedule's column contents on ring t of column j.
/// Every layer E^j is drawn with straight segments inside the band
/// [j, j+1]. Throws std::logic_error if the schedule does not close.
CylinderScene realize_cycle_drawing(int m, int n,
                                    AlternationReading alternation = AlternationReading::LayerParity,
                                    ClauseReading clauses = ClauseReading::Repaired);

/// K_m x P_n with ring j (copy j) at y = j and vertex (i, j) at x = i, period
/// m. Interior layers are helices under the winding rule; E^0 and E^{n-2}
/// use the cap assignment (the bottom one mirrored). Requires m >= 4, n >= 4.
CylinderScene realize_path_drawing(int m, int n, const CapAssignment& caps,
                                   WindingRule rule = WindingRule::Unidirectional);
CylinderScene realize_path_drawing(int m, int n);

/// Crossing-free drawings: path with m <= 3 (any n >= 2) and cycle with
/// m <= 2 (n >= 3). Throws std::invalid_argument outside those ranges.
CylinderScene planar_small_case(int m, int n, Family family);

/// Lateral segment for edge a (ring y0) -> b (ring y1) with winding delta.
Lateral helix_lateral(int a, int delta, std::int64_t y0, std::int64_t y1);

}  // namespace crossforge
