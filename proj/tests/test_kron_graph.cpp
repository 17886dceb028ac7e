#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "crossforge/kron_graph.hpp"

using namespace crossforge;

TEST(KronGraph, Counts) {
  const auto p = build_kronecker_path(4, 5);
  EXPECT_EQ(p.layer_count(), 4);
  EXPECT_EQ(p.edge_count(), 4u * 12u);
  const auto c = build_kronecker_cycle(4, 5);
  EXPECT_EQ(c.layer_count(), 5);
  EXPECT_EQ(c.edge_count(), 5u * 12u);
  EXPECT_EQ(c.degree({0, 0}), 2 * 3);
  EXPECT_EQ(p.degree({0, 0}), 3);
}

TEST(KronGraph, ProductDefinition) {
  // (a,x)(b,y) is an edge iff a != b and x, y are adjacent on the cycle
  const auto g = build_kronecker_cycle(3, 4);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) {
    edges.insert({e.from, e.to});
    edges.insert({e.to, e.from});
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
          const bool adjacent = a != b && ((x + 1) % 4 == y || (y + 1) % 4 == x);
          EXPECT_EQ(edges.contains({{a, x}, {b, y}}), adjacent);
        }
}

TEST(KronGraph, RangeChecks) {
  EXPECT_THROW(build_kronecker_path(3, 1), std::invalid_argument);
  EXPECT_THROW(build_kronecker_cycle(3, 2), std::invalid_argument);
  EXPECT_THROW(build_kronecker_cycle(3, 4).layer(4), std::out_of_range);
}

TEST(KronGraph, LayerStructure) {
  for (int m = 3; m <= 7; ++m) {
    const auto g = build_kronecker_cycle(m, 5);
    for (int j = 0; j < 5; ++j) {
      EXPECT_TRUE(layer_structure_check(g, j, LayerSpan::Single).ok);
      EXPECT_TRUE(layer_structure_check(g, j, LayerSpan::Adjacent).ok);
    }
  }
}

TEST(KronGraph, StructureCheckCatchesAMissingEdge) {
  const auto g = build_kronecker_path(4, 3);
  std::vector<std::vector<Edge>> layers;
  for (int j = 0; j < g.layer_count(); ++j) layers.emplace_back(g.layer(j).begin(), g.layer(j).end());
  layers[0].pop_back();
  const LayeredGraph broken(Family::Path, 4, 3, layers);
  const auto rep = layer_structure_check(broken, 0, LayerSpan::Single);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.witness.empty());
}

TEST(KronGraph, EdgeListRoundTrip) {
  const auto g = build_kronecker_cycle(4, 3);
  std::stringstream ss;
  write_edge_list(ss, g);
  const auto back = read_edge_list(ss, Family::Cycle, 4, 3);
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(KronGraph, FamilyParsing) {
  EXPECT_EQ(parse_family("Cycle"), Family::Cycle);
  EXPECT_EQ(parse_family("path"), Family::Path);
  EXPECT_THROW(parse_family("tree"), std::invalid_argument);
}
