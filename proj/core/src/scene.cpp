#include "crossforge/scene.hpp"

#include <algorithm>
#include <set>

namespace crossforge {

namespace {

__extension__ typedef __int128 wide;

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  const wide v = static_cast<wide>(b.x - a.x) * (c.y - a.y) - static_cast<wide>(b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

std::string describe(const Edge& e) {
  return "((" + std::to_string(e.from.copy) + "," + std::to_string(e.from.column) + "),(" +
         std::to_string(e.to.copy) + "," + std::to_string(e.to.column) + "))";
}

[[noreturn]] void degenerate(const SceneCurve& a, const SceneCurve& b, const std::string& why) {
  throw DegenerateScene("degenerate scene: " + why + " between " + describe(a.edge) + " and " +
                        describe(b.edge));
}

/// 1 for a proper crossing, 0 for none or a contact at a common endpoint.
int segment_pair(const GridPoint& p1, const GridPoint& q1, const GridPoint& p2, const GridPoint& q2,
                 const SceneCurve& a, const SceneCurve& b) {
  const int d1 = orient(p2, q2, p1), d2 = orient(p2, q2, q1);
  const int d3 = orient(p1, q1, p2), d4 = orient(p1, q1, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return 1;

  if (d1 == 0 && d2 == 0) {
    // collinear: compare extents along the dominant axis
    const bool use_x = p1.x != q1.x;
    auto key = [&](const GridPoint& g) { return use_x ? g.x : g.y; };
    const auto lo1 = std::min(key(p1), key(q1)), hi1 = std::max(key(p1), key(q1));
    const auto lo2 = std::min(key(p2), key(q2)), hi2 = std::max(key(p2), key(q2));
    const auto lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo < hi) degenerate(a, b, "overlapping curves");
    if (lo > hi) return 0;
    // single common point, necessarily an endpoint of both
    return 0;
  }

  auto touches = [&](const GridPoint& pt, int d, const GridPoint& s, const GridPoint& e,
                     const GridPoint& other_s, const GridPoint& other_e) {
    if (d != 0 || !on_segment(s, e, pt)) return;
    if (pt == other_s || pt == other_e) {
      if (pt == s || pt == e) return;  // common endpoint
    }
    degenerate(a, b, "a curve touches another without crossing");
  };
  touches(p1, d1, p2, q2, p1, q1);
  touches(q1, d2, p2, q2, p1, q1);
  touches(p2, d3, p1, q1, p2, q2);
  touches(q2, d4, p1, q1, p2, q2);
  return 0;
}

std::int64_t lateral_pair(std::int64_t period, const SceneCurve& a, const SceneCurve& b) {
  const Lateral& s = a.lateral;
  const Lateral& t = b.lateral;
  if (std::max(s.from.y, s.to.y) < std::min(t.from.y, t.to.y) ||
      std::max(t.from.y, t.to.y) < std::min(s.from.y, s.to.y)) {
    return 0;
  }
  const auto min1 = std::min(s.from.x, s.to.x), max1 = std::max(s.from.x, s.to.x);
  const auto min2 = std::min(t.from.x, t.to.x), max2 = std::max(t.from.x, t.to.x);
  std::int64_t count = 0;
  for (std::int64_t k = ceil_div(min1 - max2, period); k <= floor_div(max1 - min2, period); ++k) {
    const GridPoint p2{t.from.x + k * period, t.from.y};
    const GridPoint q2{t.to.x + k * period, t.to.y};
    count += segment_pair(s.from, s.to, p2, q2, a, b);
  }
  return count;
}

bool strictly_between_cyclic(std::int64_t x, std::int64_t p, std::int64_t q, std::int64_t period) {
  const auto dx = mod(x - p, period);
  return dx > 0 && dx < mod(q - p, period);
}

std::int64_t chord_pair(std::int64_t period, const CapRoute& c1, const CapRoute& c2) {
  const auto a = mod(c1.chord_from, period), b = mod(c1.chord_to, period);
  const auto c = mod(c2.chord_from, period), d = mod(c2.chord_to, period);
  if (a == c || a == d || b == c || b == d) return 0;
  return strictly_between_cyclic(c, a, b, period) != strictly_between_cyclic(d, a, b, period) ? 1 : 0;
}

std::int64_t drop_lateral(std::int64_t period, const SceneCurve& cap_curve, const SceneCurve& lat_curve) {
  const CapRoute& c = cap_curve.cap;
  const Lateral& l = lat_curve.lateral;
  const auto ylo = std::min(c.drop_y0, c.drop_y1), yhi = std::max(c.drop_y0, c.drop_y1);
  if (std::max(l.from.y, l.to.y) <= ylo || std::min(l.from.y, l.to.y) >= yhi) return 0;

  if (l.from.x == l.to.x) {
    if (mod(l.from.x - c.chord_to, period) == 0) degenerate(cap_curve, lat_curve, "lateral along a drop");
    return 0;
  }
  const auto xmin = std::min(l.from.x, l.to.x), xmax = std::max(l.from.x, l.to.x);
  std::int64_t count = 0;
  for (std::int64_t k = ceil_div(xmin - c.chord_to, period); k <= floor_div(xmax - c.chord_to, period);
       ++k) {
    const std::int64_t X = c.chord_to + k * period;
    // height of the lateral at X, as the fraction num / den with den > 0
    wide num = static_cast<wide>(l.from.y) * (l.to.x - l.from.x) +
               static_cast<wide>(l.to.y - l.from.y) * (X - l.from.x);
    wide den = l.to.x - l.from.x;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const bool at_lateral_end = X == l.from.x || X == l.to.x;
    const wide lo = static_cast<wide>(ylo) * den, hi = static_cast<wide>(yhi) * den;
    if (num > lo && num < hi) {
      if (at_lateral_end) degenerate(cap_curve, lat_curve, "a drop runs through a vertex");
      ++count;
    } else if ((num == lo || num == hi) && !at_lateral_end) {
      degenerate(cap_curve, lat_curve, "a lateral touches the end of a drop");
    }
  }
  return count;
}

}  // namespace

std::int64_t curve_pair_crossings(const CylinderScene& scene, const SceneCurve& a, const SceneCurve& b) {
  if (!a.is_cap && !b.is_cap) return lateral_pair(scene.period, a, b);
  if (a.is_cap && b.is_cap) {
    return a.cap.side == b.cap.side ? chord_pair(scene.period, a.cap, b.cap) : 0;
  }
  return a.is_cap ? drop_lateral(scene.period, a, b) : drop_lateral(scene.period, b, a);
}

void CylinderScene::validate() const {
  if (period < 1 || height_unit < 1) throw std::logic_error("scene: period and height unit must be positive");
  std::set<GridPoint> seen;
  for (const auto& [v, p] : vertices) {
    if (!seen.insert(GridPoint{mod(p.x, period), p.y}).second) {
      throw std::logic_error("scene: two vertices share position (" + std::to_string(p.x) + "," +
                             std::to_string(p.y) + ")");
    }
  }
  auto pos = [&](const Vertex& v) {
    auto it = vertices.find(v);
    if (it == vertices.end()) throw std::logic_error("scene: curve endpoint is not a scene vertex");
    return GridPoint{mod(it->second.x, period), it->second.y};
  };
  for (const auto& c : curves) {
    const GridPoint u = pos(c.edge.from), w = pos(c.edge.to);
    if (!c.is_cap) {
      const GridPoint a{mod(c.lateral.from.x, period), c.lateral.from.y};
      const GridPoint b{mod(c.lateral.to.x, period), c.lateral.to.y};
      if (!((a == u && b == w) || (a == w && b == u))) {
        throw std::logic_error("scene: lateral endpoints do not match edge " + describe(c.edge));
      }
      continue;
    }
    const std::int64_t rim = c.cap.side == CapSide::Top ? 0 : height;
    if (c.cap.drop_y0 != rim) throw std::logic_error("scene: cap drop does not start on its rim");
    const GridPoint start{mod(c.cap.chord_from, period), rim};
    const GridPoint end{mod(c.cap.chord_to, period), c.cap.drop_y1};
    if (!((start == u && end == w) || (start == w && end == u))) {
      throw std::logic_error("scene: cap route endpoints do not match edge " + describe(c.edge));
    }
  }
}

namespace {

/// A lateral running through a vertex that is not one of its endpoints.
void check_vertex_clearance(const CylinderScene& scene) {
  for (const auto& c : scene.curves) {
    if (c.is_cap) continue;
    const Lateral& l = c.lateral;
    const auto xmin = std::min(l.from.x, l.to.x), xmax = std::max(l.from.x, l.to.x);
    for (const auto& [v, p] : scene.vertices) {
      if (p.y < std::min(l.from.y, l.to.y) || p.y > std::max(l.from.y, l.to.y)) continue;
      for (std::int64_t k = ceil_div(xmin - p.x, scene.period); k <= floor_div(xmax - p.x, scene.period);
           ++k) {
        const GridPoint q{p.x + k * scene.period, p.y};
        if (q == l.from || q == l.to) continue;
        if (orient(l.from, l.to, q) == 0) {
          throw DegenerateScene("degenerate scene: " + describe(c.edge) + " runs through vertex (" +
                                std::to_string(v.copy) + "," + std::to_string(v.column) + ")");
        }
      }
    }
  }
}

}  // namespace

std::int64_t count_scene_crossings(const CylinderScene& scene) {
  scene.validate();
  check_vertex_clearance(scene);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < scene.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.curves.size(); ++j) {
      total += curve_pair_crossings(scene, scene.curves[i], scene.curves[j]);
    }
  }
  return total;
}

std::int64_t count_cross_layer_crossings(const CylinderScene& scene) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < scene.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.curves.size(); ++j) {
      if (scene.curves[i].layer != scene.curves[j].layer) {
        total += curve_pair_crossings(scene, scene.curves[i], scene.curves[j]);
      }
    }
  }
  return total;
}

std::int64_t count_layer_crossings(const CylinderScene& scene, int layer) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < scene.curves.size(); ++i) {
    if (scene.curves[i].layer != layer) continue;
    for (std::size_t j = i + 1; j < scene.curves.size(); ++j) {
      if (scene.curves[j].layer == layer) total += curve_pair_crossings(scene, scene.curves[i], scene.curves[j]);
    }
  }
  return total;
}

nlohmann::ordered_json CylinderScene::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["m"] = m;
  j["n"] = n;
  j["family"] = to_string(family);
  j["construction"] = construction;
  j["period"] = period;
  j["height_unit"] = height_unit;
  j["height"] = height;
  j["schedule"] = schedule;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& [v, p] : vertices) {
    vs.push_back({{"copy", v.copy}, {"column", v.column}, {"x", p.x}, {"y", p.y}});
  }
  auto& cs = j["curves"] = nlohmann::ordered_json::array();
  for (const auto& c : curves) {
    nlohmann::ordered_json e;
    e["edge"] = {c.edge.from.copy, c.edge.from.column, c.edge.to.copy, c.edge.to.column};
    e["layer"] = c.layer;
    if (c.is_cap) {
      e["kind"] = "cap";
      e["side"] = c.cap.side == CapSide::Top ? "top" : "bottom";
      e["chord"] = {c.cap.chord_from, c.cap.chord_to};
      e["drop"] = {c.cap.drop_y0, c.cap.drop_y1};
    } else {
      e["kind"] = "lateral";
      e["from"] = {c.lateral.from.x, c.lateral.from.y};
      e["to"] = {c.lateral.to.x, c.lateral.to.y};
    }
    cs.push_back(std::move(e));
  }
  return j;
}

}  // namespace crossforge
