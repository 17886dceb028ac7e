#include "crossforge/kron_graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crossforge {

namespace {

std::string describe(const Edge& e) {
  std::ostringstream os;
  os << "((" << e.from.copy << "," << e.from.column << "),(" << e.to.copy << "," << e.to.column
     << "))";
  return os.str();
}

std::set<Edge> canonical_layer(int m, int from_column, int to_column) {
  std::set<Edge> out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) out.insert(Edge{{a, from_column}, {b, to_column}});
    }
  }
  return out;
}

}  // namespace

std::string to_string(Family family) { return family == Family::Path ? "path" : "cycle"; }

Family parse_family(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "path") return Family::Path;
  if (lower == "cycle") return Family::Cycle;
  throw std::invalid_argument("unknown family '" + text + "' (expected path or cycle)");
}

LayeredGraph::LayeredGraph(Family family, int m, int n, std::vector<std::vector<Edge>> layers)
    : family_(family), m_(m), n_(n), layers_(std::move(layers)) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("LayeredGraph: m and n must be positive");
  }
  for (const auto& layer : layers_) {
    for (const auto& e : layer) {
      for (const Vertex& v : {e.from, e.to}) {
        if (v.copy < 0 || v.copy >= m || v.column < 0 || v.column >= n) {
          throw std::invalid_argument("LayeredGraph: vertex out of range in edge " + describe(e));
        }
      }
    }
  }
}

std::size_t LayeredGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.size();
  return total;
}

std::span<const Edge> LayeredGraph::layer(int j) const {
  if (j < 0 || j >= layer_count()) {
    throw std::out_of_range("layer index " + std::to_string(j) + " outside [0, " +
                            std::to_string(layer_count()) + ")");
  }
  return layers_[static_cast<std::size_t>(j)];
}

std::vector<Edge> LayeredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& layer : layers_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

int LayeredGraph::degree(const Vertex& v) const {
  int d = 0;
  for (const auto& layer : layers_) {
    for (const auto& e : layer) {
      if (e.from == v) ++d;
      if (e.to == v) ++d;
    }
  }
  return d;
}

namespace {

LayeredGraph build(Family family, int m, int n, int layer_count) {
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(layer_count));
  for (int j = 0; j < layer_count; ++j) {
    const int next = (j + 1) % n;
    auto& layer = layers[static_cast<std::size_t>(j)];
    layer.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) layer.push_back(Edge{{a, j}, {b, next}});
      }
    }
  }
  return LayeredGraph(family, m, n, std::move(layers));
}

}  // namespace

LayeredGraph build_kronecker_path(int m, int n) {
  if (m < 1) throw std::invalid_argument("build_kronecker_path: m must be >= 1");
  if (n < 2) throw std::invalid_argument("build_kronecker_path: n must be >= 2");
  return build(Family::Path, m, n, n - 1);
}

LayeredGraph build_kronecker_cycle(int m, int n) {
  if (m < 1) throw std::invalid_argument("build_kronecker_cycle: m must be >= 1");
  if (n < 3) {
    throw std::invalid_argument("build_kronecker_cycle: n must be >= 3 (n = 2 needs parallel edges)");
  }
  return build(Family::Cycle, m, n, n);
}

LayeredGraph build_kronecker(Family family, int m, int n) {
  return family == Family::Path ? build_kronecker_path(m, n) : build_kronecker_cycle(m, n);
}

std::span<const Edge> layer_edges(const LayeredGraph& g, int j) { return g.layer(j); }

StructureReport layer_structure_check(const LayeredGraph& g, int j, LayerSpan span) {
  const int n = g.n();
  const int m = g.m();
  auto layer_columns = [&](int idx) { return std::pair{idx, (idx + 1) % n}; };

  auto compare = [](const std::set<Edge>& expected, std::span<const Edge> actual_span,
                    const std::string& what) -> StructureReport {
    std::set<Edge> actual;
    for (const auto& e : actual_span) {
      if (!actual.insert(e).second) {
        return {false, what + ": duplicate edge " + describe(e)};
      }
    }
    for (const auto& e : actual) {
      if (!expected.contains(e)) return {false, what + ": unexpected edge " + describe(e)};
    }
    for (const auto& e : expected) {
      if (!actual.contains(e)) return {false, what + ": missing edge " + describe(e)};
    }
    return {};
  };

  if (span == LayerSpan::Single) {
    auto [c0, c1] = layer_columns(j);
    return compare(canonical_layer(m, c0, c1), g.layer(j), "layer " + std::to_string(j));
  }

  // Cycles wrap: E^{n-1} is followed by E^0.
  const bool wraps = g.family() == Family::Cycle;
  const int k = wraps ? (j + 1) % g.layer_count() : j + 1;
  if (k >= g.layer_count()) {
    throw std::out_of_range("layer_structure_check: layer " + std::to_string(k) + " does not exist");
  }
  auto [c0, c1] = layer_columns(j);
  auto [d0, d1] = layer_columns(k);
  if (c1 != d0) {
    return {false, "layers " + std::to_string(j) + " and " + std::to_string(k) + " do not share a column"};
  }
  if (c0 == d1) {
    return {false, "outer columns coincide; the union is not bipartite with a 2m side"};
  }
  std::vector<Edge> both;
  for (const auto& e : g.layer(j)) both.push_back(e);
  for (const auto& e : g.layer(k)) both.push_back(e);

  // K_{m,2m} - mK_{1,2}: middle vertex (i, c1) misses exactly (i, c0) and (i, d1).
  std::set<Edge> expected = canonical_layer(m, c0, c1);
  expected.merge(canonical_layer(m, d0, d1));
  if (auto r = compare(expected, both, "layers " + std::to_string(j) + "+" + std::to_string(k));
      !r.ok) {
    return r;
  }
  std::map<int, int> middle_degree;
  for (const auto& e : both) {
    if (e.to.column == c1) ++middle_degree[e.to.copy];
    if (e.from.column == c1) ++middle_degree[e.from.copy];
  }
  for (int i = 0; i < m; ++i) {
    if (middle_degree[i] != 2 * (m - 1)) {
      return {false, "middle vertex (" + std::to_string(i) + "," + std::to_string(c1) +
                         ") has degree " + std::to_string(middle_degree[i])};
    }
  }
  return {};
}

void write_edge_list(std::ostream& os, const LayeredGraph& g) {
  for (int j = 0; j < g.layer_count(); ++j) {
    for (const auto& e : g.layer(j)) {
      os << e.from.copy << ' ' << e.from.column << ' ' << e.to.copy << ' ' << e.to.column << '\n';
    }
  }
}

LayeredGraph read_edge_list(std::istream& is, Family family, int m, int n) {
  const int layer_count = family == Family::Path ? n - 1 : n;
  if (layer_count < 1) throw std::invalid_argument("read_edge_list: no layers for this shape");
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(layer_count));
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.from.copy >> e.from.column >> e.to.copy >> e.to.column)) {
      throw std::invalid_argument("read_edge_list: malformed line " + std::to_string(line_no));
    }
    if (e.from.column < 0 || e.from.column >= layer_count) {
      throw std::invalid_argument("read_edge_list: source column out of range on line " +
                                  std::to_string(line_no));
    }
    layers[static_cast<std::size_t>(e.from.column)].push_back(e);
  }
  return LayeredGraph(family, m, n, std::move(layers));
}

}  // namespace crossforge
