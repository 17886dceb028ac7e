#include "crossforge/drawing.hpp"

#include <map>
#include <stdexcept>

namespace crossforge {

Lateral helix_lateral(int a, int delta, std::int64_t y0, std::int64_t y1) {
  return Lateral{GridPoint{a, y0}, GridPoint{static_cast<std::int64_t>(a) + delta, y1}};
}

CylinderScene realize_cycle_drawing(int m, int n, AlternationReading alternation, ClauseReading clauses) {
  const ScheduleAssignment schedule = schedule_for(m, n, Family::Cycle, alternation, clauses);
  if (!schedule_closes(schedule)) {
    throw std::logic_error("realize_cycle_drawing: schedule does not close around the cycle at m=" +
                           std::to_string(m) + ", n=" + std::to_string(n));
  }
  const auto contents = column_contents(schedule);

  CylinderScene scene;
  scene.m = m;
  scene.n = n;
  scene.family = Family::Cycle;
  scene.period = n;
  scene.height = m - 1;
  scene.construction = "cycle-schedule/" + to_string(alternation) + "/" + to_string(clauses);
  scene.schedule = schedule.families();

  std::vector<std::vector<int>> ring_of(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < m; ++t) {
      const int v = contents[j][t];
      ring_of[j][v] = t;
      scene.vertices[Vertex{v, j}] = GridPoint{j, t};
    }
  }

  const LayeredGraph g = build_kronecker_cycle(m, n);
  for (int j = 0; j < n; ++j) {
    const int next = (j + 1) % n;
    for (const Edge& e : g.layer(j)) {
      if (e.from.column != j || e.to.column != next) throw std::logic_error("realize_cycle_drawing: layer mismatch");
      SceneCurve c;
      c.edge = e;
      c.layer = j;
      c.lateral = Lateral{GridPoint{j, ring_of[j][e.from.copy]}, GridPoint{j + 1, ring_of[next][e.to.copy]}};
      scene.curves.push_back(c);
    }
  }
  return scene;
}

CylinderScene realize_path_drawing(int m, int n, const CapAssignment& caps, WindingRule rule) {
  if (m < 4 || n < 4) throw std::invalid_argument("realize_path_drawing: requires m >= 4 and n >= 4");
  if (caps.m != m || caps.over_cap.size() != caps.edges.size()) {
    throw std::invalid_argument("realize_path_drawing: cap assignment is for a different m");
  }
  std::map<std::pair<int, int>, bool> over;
  for (std::size_t k = 0; k < caps.edges.size(); ++k) over[caps.edges[k]] = caps.over_cap[k];

  CylinderScene scene;
  scene.m = m;
  scene.n = n;
  scene.family = Family::Path;
  scene.period = m;
  scene.height = n - 1;
  scene.construction = "path-helix/" + to_string(rule) + (caps.exhaustive ? "/caps-exhaustive" : "/caps-local");
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) scene.vertices[Vertex{i, j}] = GridPoint{i, j};
  }

  const LayeredGraph g = build_kronecker_path(m, n);
  const int last = n - 2;
  for (int j = 0; j <= last; ++j) {
    for (const Edge& e : g.layer(j)) {
      SceneCurve c;
      c.edge = e;
      c.layer = j;
      if (j == 0) {
        const int a = e.from.copy, b = e.to.copy;
        c.is_cap = over.at({a, b});
        if (c.is_cap) {
          c.cap = CapRoute{CapSide::Top, a, b, 0, 1};
        } else {
          c.lateral = helix_lateral(a, helix_displacement(a, b, m, rule), 0, 1);
        }
      } else if (j == last) {
        // mirror image of E^0: ring n-1 plays ring 0
        const int a = e.to.copy, b = e.from.copy;
        c.is_cap = over.at({a, b});
        if (c.is_cap) {
          c.cap = CapRoute{CapSide::Bottom, a, b, n - 1, n - 2};
        } else {
          c.lateral = helix_lateral(a, helix_displacement(a, b, m, rule), n - 1, n - 2);
        }
      } else {
        c.lateral = helix_lateral(e.from.copy, helix_displacement(e.from.copy, e.to.copy, m, rule), j, j + 1);
      }
      scene.curves.push_back(c);
    }
  }
  return scene;
}

CylinderScene realize_path_drawing(int m, int n) {
  if (m < 4 || n < 4) throw std::invalid_argument("realize_path_drawing: requires m >= 4 and n >= 4");
  return realize_path_drawing(m, n, cap_route_search(m));
}

namespace {

CylinderScene planar_path(int m, int n) {
  CylinderScene scene;
  scene.m = m;
  scene.n = n;
  scene.family = Family::Path;
  scene.period = std::max(m, 1);
  scene.height = n - 1;
  scene.construction = "planar-path";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) scene.vertices[Vertex{i, j}] = GridPoint{i, j};
  }
  const LayeredGraph g = build_kronecker_path(m, n);
  for (int j = 0; j < g.layer_count(); ++j) {
    for (const Edge& e : g.layer(j)) {
      SceneCurve c;
      c.edge = e;
      c.layer = j;
      c.lateral = helix_lateral(e.from.copy, helix_displacement(e.from.copy, e.to.copy, m), j, j + 1);
      scene.curves.push_back(c);
    }
  }
  return scene;
}

// K_1 x C_n is edgeless and K_2 x C_n is a union of cycles; each cycle is laid
// out along its own horizontal ring.
CylinderScene planar_cycle(int m, int n) {
  CylinderScene scene;
  scene.m = m;
  scene.n = n;
  scene.family = Family::Cycle;
  scene.period = 2 * static_cast<std::int64_t>(n);
  scene.construction = "planar-cycle";
  const LayeredGraph g = build_kronecker_cycle(m, n);
  if (m == 1) {
    for (int j = 0; j < n; ++j) scene.vertices[Vertex{0, j}] = GridPoint{2 * j, 0};
    return scene;
  }

  std::map<Vertex, std::vector<Edge>> incident;
  for (const Edge& e : g.edges()) {
    incident[e.from].push_back(e);
    incident[e.to].push_back(e);
  }
  std::map<Vertex, bool> placed;
  std::map<Edge, int> layer_of;
  for (int j = 0; j < g.layer_count(); ++j) {
    for (const Edge& e : g.layer(j)) layer_of[e] = j;
  }
  int ring = 0;
  for (const auto& [start, unused] : incident) {
    if (placed[start]) continue;
    std::vector<Vertex> cyc{start};
    std::vector<Edge> walk;
    placed[start] = true;
    Vertex cur = start;
    Edge prev{};
    bool first = true;
    while (true) {
      const auto& inc = incident[cur];
      const Edge& e = (first || inc[0] != prev) ? inc[0] : inc[1];
      first = false;
      const Vertex next = e.from == cur ? e.to : e.from;
      walk.push_back(e);
      prev = e;
      if (next == start) break;
      placed[next] = true;
      cyc.push_back(next);
      cur = next;
    }
    const auto L = static_cast<std::int64_t>(cyc.size());
    const std::int64_t spacing = scene.period / L;
    const std::int64_t y = 2 * ring;
    for (std::int64_t k = 0; k < L; ++k) scene.vertices[cyc[k]] = GridPoint{k * spacing, y};
    for (std::int64_t k = 0; k < L; ++k) {
      const Edge& e = walk[k];
      SceneCurve c;
      c.edge = e;
      c.layer = layer_of.at(e);
      c.lateral = Lateral{GridPoint{k * spacing, y}, GridPoint{(k + 1) * spacing, y}};
      scene.curves.push_back(c);
    }
    ++ring;
  }
  scene.height = 2 * (ring - 1);
  return scene;
}

}  // namespace

CylinderScene planar_small_case(int m, int n, Family family) {
  if (m < 1) throw std::invalid_argument("planar_small_case: requires m >= 1");
  if (family == Family::Path) {
    if (m > 3 || n < 2) throw std::invalid_argument("planar_small_case: path needs m <= 3 and n >= 2");
    return planar_path(m, n);
  }
  if (m > 2 || n < 3) throw std::invalid_argument("planar_small_case: cycle needs m <= 2 and n >= 3");
  return planar_cycle(m, n);
}

}  // namespace crossforge
