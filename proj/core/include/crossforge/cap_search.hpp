#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace crossforge {

/// Routing of the end layer between ring 0 (on the top rim) and ring 1 of a
/// path drawing with m positions per ring.
struct CapAssignment {
  int m = 0;
  std::vector<std::pair<int, int>> edges;  // (a on ring 0, b on ring 1), lexicographic
  std::vector<bool> over_cap;              // per edge: cap route instead of lateral
  std::int64_t crossings = 0;
  bool exhaustive = false;
};

struct CapSearchOptions {
  int restarts = 64;          // local search only
  std::uint32_t seed = 1;
  int exhaustive_limit = 5;   // largest m searched exhaustively
};

/// Minimizes the crossings of one end layer over all lateral / cap choices.
/// Pair costs come from the scene primitives; m <= exhaustive_limit is
/// searched exhaustively (Gray code), larger m by seeded restarts of
/// single-flip descent. Requires m >= 2.
CapAssignment cap_route_search(int m, const CapSearchOptions& options = {});

/// Crossings of the end layer under a given choice vector.
std::int64_t cap_layer_crossings(int m, const std::vector<bool>& over_cap);

}  // namespace crossforge
