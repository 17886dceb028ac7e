#include "crossforge/cap_search.hpp"

#include <array>
#include <bit>
#include <random>
#include <stdexcept>

#include "crossforge/drawing.hpp"

namespace crossforge {

namespace {

struct PairCosts {
  int size = 0;
  std::vector<std::int8_t> table;  // [i][j][xi][xj]

  int at(int i, int j, bool xi, bool xj) const {
    return table[((static_cast<std::size_t>(i) * size + j) * 2 + xi) * 2 + xj];
  }
};

SceneCurve end_layer_curve(int m, int a, int b, bool cap) {
  SceneCurve c;
  c.edge = Edge{Vertex{a, 0}, Vertex{b, 1}};
  c.is_cap = cap;
  if (cap) {
    c.cap = CapRoute{CapSide::Top, a, b, 0, 1};
  } else {
    c.lateral = helix_lateral(a, helix_displacement(a, b, m), 0, 1);
  }
  return c;
}

std::vector<std::pair<int, int>> end_layer_edges(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) edges.emplace_back(a, b);
    }
  }
  return edges;
}

PairCosts pair_costs(int m, const std::vector<std::pair<int, int>>& edges) {
  CylinderScene scene;
  scene.m = m;
  scene.n = 2;
  scene.family = Family::Path;
  scene.period = m;
  scene.height = 1;
  const int N = static_cast<int>(edges.size());
  std::vector<std::array<SceneCurve, 2>> curves;
  curves.reserve(edges.size());
  for (const auto& [a, b] : edges) curves.push_back({end_layer_curve(m, a, b, false), end_layer_curve(m, a, b, true)});

  PairCosts pc;
  pc.size = N;
  pc.table.assign(static_cast<std::size_t>(N) * N * 4, 0);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      for (int xi = 0; xi < 2; ++xi) {
        for (int xj = 0; xj < 2; ++xj) {
          const auto c = static_cast<std::int8_t>(curve_pair_crossings(scene, curves[i][xi], curves[j][xj]));
          pc.table[((static_cast<std::size_t>(i) * N + j) * 2 + xi) * 2 + xj] = c;
          pc.table[((static_cast<std::size_t>(j) * N + i) * 2 + xj) * 2 + xi] = c;
        }
      }
    }
  }
  return pc;
}

std::int64_t evaluate(const PairCosts& pc, const std::vector<bool>& x) {
  std::int64_t total = 0;
  for (int i = 0; i < pc.size; ++i) {
    for (int j = i + 1; j < pc.size; ++j) total += pc.at(i, j, x[i], x[j]);
  }
  return total;
}

std::int64_t flip_delta(const PairCosts& pc, const std::vector<bool>& x, int k) {
  std::int64_t d = 0;
  for (int j = 0; j < pc.size; ++j) {
    if (j != k) d += pc.at(k, j, !x[k], x[j]) - pc.at(k, j, x[k], x[j]);
  }
  return d;
}

}  // namespace

std::int64_t cap_layer_crossings(int m, const std::vector<bool>& over_cap) {
  const auto edges = end_layer_edges(m);
  if (over_cap.size() != edges.size()) throw std::invalid_argument("cap_layer_crossings: wrong assignment size");
  return evaluate(pair_costs(m, edges), over_cap);
}

CapAssignment cap_route_search(int m, const CapSearchOptions& options) {
  if (m < 2) throw std::invalid_argument("cap_route_search: requires m >= 2");
  CapAssignment out;
  out.m = m;
  out.edges = end_layer_edges(m);
  const PairCosts pc = pair_costs(m, out.edges);
  const int N = pc.size;

  std::vector<bool> x(static_cast<std::size_t>(N), false);
  std::int64_t cur = evaluate(pc, x);
  out.over_cap = x;
  out.crossings = cur;

  if (m <= options.exhaustive_limit) {
    out.exhaustive = true;
    const std::uint64_t count = std::uint64_t{1} << N;
    for (std::uint64_t g = 1; g < count; ++g) {
      const int k = std::countr_zero(g);
      cur += flip_delta(pc, x, k);
      x[k] = !x[k];
      if (cur < out.crossings) {
        out.crossings = cur;
        out.over_cap = x;
      }
    }
    return out;
  }

  std::mt19937 rng(options.seed);
  for (int rep = 0; rep < options.restarts; ++rep) {
    // the first start is all-lateral so the result never exceeds it
    for (int i = 0; i < N; ++i) x[i] = rep == 0 ? false : (rng() & 1U) != 0;
    cur = evaluate(pc, x);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int k = 0; k < N; ++k) {
        const auto d = flip_delta(pc, x, k);
        if (d < 0) {
          x[k] = !x[k];
          cur += d;
          improved = true;
        }
      }
    }
    if (cur < out.crossings) {
      out.crossings = cur;
      out.over_cap = x;
    }
  }
  return out;
}

}  // namespace crossforge
