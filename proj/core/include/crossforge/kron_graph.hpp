#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crossforge {

enum class Family { Path, Cycle };

std::string to_string(Family family);
/// Accepts "path" / "cycle" (case-insensitive); throws std::invalid_argument.
Family parse_family(const std::string& text);

/// Vertex (i, j) of K_m x P_n or K_m x C_n: i is the K_m vertex, j the column.
struct Vertex {
  int copy = 0;
  int column = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Edge stored canonically from column j to column j + 1 (mod n for cycles).
struct Edge {
  Vertex from;
  Vertex to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// K_m x P_n or K_m x C_n together with its layer decomposition E^0, E^1, ...
///
/// Layer j holds every edge ((i1, j), (i2, j + 1)) with i1 != i2. Immutable
/// after construction.
class LayeredGraph {
 public:
  /// Assembles a graph from explicit layers. Only range checks are performed,
  /// so the result may violate the product structure (useful for negative
  /// controls); use the build_* functions for the real products.
  LayeredGraph(Family family, int m, int n, std::vector<std::vector<Edge>> layers);

  Family family() const { return family_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  int vertex_count() const { return m_ * n_; }
  std::size_t edge_count() const;

  /// E^j; throws std::out_of_range for a bad index.
  std::span<const Edge> layer(int j) const;
  std::vector<Edge> edges() const;
  int degree(const Vertex& v) const;

 private:
  Family family_;
  int m_;
  int n_;
  std::vector<std::vector<Edge>> layers_;
};

/// K_m x P_n; requires m >= 1 and n >= 2.
LayeredGraph build_kronecker_path(int m, int n);
/// K_m x C_n; requires m >= 1 and n >= 3 (n = 2 would need parallel edges).
LayeredGraph build_kronecker_cycle(int m, int n);
LayeredGraph build_kronecker(Family family, int m, int n);

/// E^j (same as g.layer(j)).
std::span<const Edge> layer_edges(const LayeredGraph& g, int j);

enum class LayerSpan { Single, Adjacent };

struct StructureReport {
  bool ok = true;
  std::string witness;  // first violating edge or vertex when !ok
};

/// Single: E^j induces K_{m,m} - mK_2 (compared against the canonical edge set).
/// Adjacent: E^j u E^{j+1} induces K_{m,2m} - mK_{1,2}, with the middle column
/// as the m-side; degrees of the middle column are checked as well.
StructureReport layer_structure_check(const LayeredGraph& g, int j, LayerSpan span);

/// One line per edge: "i1 j1 i2 j2", layers in order.
void write_edge_list(std::ostream& os, const LayeredGraph& g);
/// Reads the edge list back into a graph of the given shape, assigning each
/// edge to the layer of its source column. Throws std::invalid_argument.
LayeredGraph read_edge_list(std::istream& is, Family family, int m, int n);

}  // namespace crossforge
