#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossforge/exact.hpp"
#include "crossforge/kron_graph.hpp"

namespace crossforge {

/// 0.8594 as an exact rational.
ExactValue zarankiewicz_constant();

/// Vertex of a bipartite host or guest graph: part index (0 = a/u side,
/// 1 = b/v side, 2 = c/w side) and index within the part.
struct PartVertex {
  int part = 0;
  int index = 0;

  friend auto operator<=>(const PartVertex&, const PartVertex&) = default;
};

struct HostEdge {
  PartVertex u;  // always the part-0 endpoint
  PartVertex v;

  friend auto operator<=>(const HostEdge&, const HostEdge&) = default;
};

/// One copy k of a guest edge and the host path it is routed along.
struct Route {
  PartVertex from;  // guest endpoints
  PartVertex to;
  int copy = 0;     // 1-based copy index k
  std::vector<PartVertex> path;  // host vertices, from phi(from) to phi(to)
};

/// Guest: complete bipartite multigraph between part 0 (size m) and each of
/// the other parts (size m), every pair joined by `multiplicity` parallel
/// edges. Host: `host_edges`. phi is the identity on (part, index).
struct Embedding {
  int m = 0;
  int parts = 2;  // 2 for K_{m,m}, 3 for K_{m,2m}
  int multiplicity = 1;
  std::vector<HostEdge> host_edges;
  std::vector<Route> routes;

  /// Checks route endpoints and that every route step is a host edge.
  /// Throws std::logic_error describing the first violation.
  void validate() const;
  int host_vertex_count() const { return parts * m; }
  int host_max_degree() const;
};

/// All ordered pairs (alpha, beta), alpha != beta, from {0..m-1} \ {i}, in
/// lexicographic order; the k-th entry (1-based) is the k-th arrangement.
std::vector<std::pair<int, int>> enumerate_arrangements(int m, int i);

/// K_{m,m}^{(m-1)(m-2)} into K_{m,m} - mK_2.
Embedding build_embedding_kmm(int m);
/// K_{m,2m}^{(m-1)(m-2)} into K_{m,2m} - mK_{1,2}.
Embedding build_embedding_km2m(int m);
/// K_{m,m} into itself, direct routes, multiplicity 1.
Embedding build_trivial_embedding(int m);

struct CongestionReport {
  std::map<HostEdge, std::int64_t> per_edge;
  std::int64_t max = 0;
  std::int64_t total_route_length = 0;

  bool uniform() const;
  std::int64_t sum() const;
};

CongestionReport congestion(const Embedding& e);

/// 0.8594 floor(m/2) floor((m-1)/2) floor(n/2) floor((n-1)/2).
ExactValue kmn_lower(int m, int n);
/// x^2 * base.
ExactValue multigraph_scale(std::int64_t x, const ExactValue& base);
/// cr(G1)/cg^2 - (|V2|/2) Delta^2; throws std::invalid_argument when cg < 1.
ExactValue leighton_bound(const ExactValue& cr_guest_lower, std::int64_t cg, std::int64_t host_vertices,
                          std::int64_t host_max_degree);

/// Closed forms for cr(K_{m,m} - mK_2) and cr(K_{m,2m} - mK_{1,2}).
ExactValue lb_kmm_minus_matching(int m);
ExactValue lb_km2m(int m);
/// The same bounds rebuilt from the embedding: kmn_lower -> multigraph_scale
/// -> congestion -> leighton_bound.
ExactValue lb_kmm_minus_matching_pipeline(int m);
ExactValue lb_km2m_pipeline(int m);

struct LowerBound {
  ExactValue raw;
  ExactValue clamped;
};

/// Parity-cased combinations of the two bounds over the layers of K_m x P_n
/// (n >= 2) and K_m x C_n (n >= 3); m >= 4.
LowerBound lower_bound_path(int m, int n);
LowerBound lower_bound_cycle(int m, int n);
LowerBound lower_bound(Family family, int m, int n);

}  // namespace crossforge
