#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossforge/kron_graph.hpp"

namespace crossforge {

/// Raised when two curves touch without crossing, overlap, or a curve runs
/// through a vertex that is not its endpoint.
class DegenerateScene : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point on the unrolled cylinder: x is the angular coordinate in units of
/// 1/period of a turn (taken modulo period), y the height (0 = top rim).
struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class CapSide { Top, Bottom };

/// A straight segment of the unrolled cylinder from `from` to `to`; `to.x`
/// is not reduced, so to.x - from.x is the signed winding.
struct Lateral {
  GridPoint from;
  GridPoint to;
};

/// A chord across a cap disk between rim angles chord_from and chord_to,
/// followed by a meridian at angle chord_to running between heights drop_y0
/// and drop_y1 (drop_y0 on the rim of the cap).
struct CapRoute {
  CapSide side = CapSide::Top;
  std::int64_t chord_from = 0;
  std::int64_t chord_to = 0;
  std::int64_t drop_y0 = 0;
  std::int64_t drop_y1 = 0;
};

struct SceneCurve {
  Edge edge;
  int layer = 0;
  bool is_cap = false;
  Lateral lateral;  // valid when !is_cap
  CapRoute cap;     // valid when is_cap
};

/// A drawing on a cylinder with exact integer coordinates. The circumference
/// is `period` grid units (angle = x / period); heights are integers with
/// `height_unit` units between consecutive rings.
struct CylinderScene {
  int m = 0;
  int n = 0;
  Family family = Family::Cycle;
  std::int64_t period = 1;
  std::int64_t height_unit = 1;
  std::int64_t height = 0;  // bottom rim
  std::string construction;
  std::vector<int> schedule;  // layer families for cycle drawings
  std::map<Vertex, GridPoint> vertices;
  std::vector<SceneCurve> curves;

  /// Distinct vertex positions (mod period), curve endpoints on their
  /// vertices, caps on the right rim. Throws std::logic_error.
  void validate() const;

  nlohmann::ordered_json to_json() const;
};

/// Crossings between two curves of the same scene.
std::int64_t curve_pair_crossings(const CylinderScene& scene, const SceneCurve& a, const SceneCurve& b);

/// Total pairwise crossing count. Laterals are intersected exactly on the
/// unrolled cylinder (all translates by the period); cap chords on the same
/// cap cross iff their rim endpoints interleave (a shared endpoint never
/// counts); a drop at angle t crosses a lateral iff the lateral passes t
/// strictly inside the drop's height range; drops never cross each other.
/// Pairs sharing an endpoint only at that endpoint are not counted.
std::int64_t count_scene_crossings(const CylinderScene& scene);

/// Crossings between curves of different layers (0 for the constructions).
std::int64_t count_cross_layer_crossings(const CylinderScene& scene);

/// Crossings among curves of a single layer.
std::int64_t count_layer_crossings(const CylinderScene& scene, int layer);

}  // namespace crossforge
