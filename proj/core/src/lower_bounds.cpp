#include "crossforge/lower_bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crossforge {

ExactValue zarankiewicz_constant() { return ExactValue::fraction(4297, 5000); }

namespace {

std::string name(const PartVertex& v) {
  static const char* letters = "abc";
  return std::string(1, letters[v.part]) + std::to_string(v.index);
}

HostEdge make_edge(const PartVertex& x, const PartVertex& y) {
  return x.part == 0 ? HostEdge{x, y} : HostEdge{y, x};
}

}  // namespace

void Embedding::validate() const {
  std::set<HostEdge> host(host_edges.begin(), host_edges.end());
  for (const auto& r : routes) {
    if (r.path.size() < 2) throw std::logic_error("route with fewer than two vertices");
    // phi is the identity on (part, index)
    if (r.path.front() != r.from || r.path.back() != r.to) {
      throw std::logic_error("route endpoints do not match phi for " + name(r.from) + "-" + name(r.to));
    }
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      if (!host.contains(make_edge(r.path[i], r.path[i + 1]))) {
        throw std::logic_error("route step " + name(r.path[i]) + "-" + name(r.path[i + 1]) +
                               " is not a host edge");
      }
    }
  }
}

int Embedding::host_max_degree() const {
  std::map<PartVertex, int> deg;
  for (const auto& e : host_edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  int best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

std::vector<std::pair<int, int>> enumerate_arrangements(int m, int i) {
  if (m < 3) throw std::invalid_argument("enumerate_arrangements: requires m >= 3");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>((m - 1) * (m - 2)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != i && b != i && a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

Embedding build_detour_embedding(int m, int parts) {
  if (m < 4) throw std::invalid_argument("embedding construction requires m >= 4");
  Embedding e;
  e.m = m;
  e.parts = parts;
  e.multiplicity = (m - 1) * (m - 2);
  for (int side = 1; side < parts; ++side) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) e.host_edges.push_back({{0, i}, {side, j}});
      }
    }
  }
  e.routes.reserve(static_cast<std::size_t>(parts - 1) * m * m * e.multiplicity);
  for (int side = 1; side < parts; ++side) {
    for (int i = 0; i < m; ++i) {
      const auto arr = enumerate_arrangements(m, i);
      for (int j = 0; j < m; ++j) {
        const PartVertex u{0, i}, v{side, j};
        for (int k = 1; k <= e.multiplicity; ++k) {
          Route r{u, v, k, {}};
          if (i == j) {
            const auto [alpha, beta] = arr[static_cast<std::size_t>(k - 1)];
            r.path = {u, {side, alpha}, {0, beta}, v};
          } else {
            r.path = {u, v};
          }
          e.routes.push_back(std::move(r));
        }
      }
    }
  }
  e.validate();
  return e;
}

}  // namespace

Embedding build_embedding_kmm(int m) { return build_detour_embedding(m, 2); }

Embedding build_embedding_km2m(int m) { return build_detour_embedding(m, 3); }

Embedding build_trivial_embedding(int m) {
  if (m < 1) throw std::invalid_argument("build_trivial_embedding: requires m >= 1");
  Embedding e;
  e.m = m;
  e.parts = 2;
  e.multiplicity = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      e.host_edges.push_back({{0, i}, {1, j}});
      e.routes.push_back({{0, i}, {1, j}, 1, {{0, i}, {1, j}}});
    }
  }
  e.validate();
  return e;
}

bool CongestionReport::uniform() const {
  return std::all_of(per_edge.begin(), per_edge.end(),
                     [&](const auto& kv) { return kv.second == max; });
}

std::int64_t CongestionReport::sum() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : per_edge) total += c;
  return total;
}

CongestionReport congestion(const Embedding& e) {
  CongestionReport rep;
  for (const auto& h : e.host_edges) rep.per_edge[h] = 0;
  for (const auto& r : e.routes) {
    rep.total_route_length += static_cast<std::int64_t>(r.path.size()) - 1;
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      auto it = rep.per_edge.find(make_edge(r.path[i], r.path[i + 1]));
      if (it == rep.per_edge.end()) throw std::logic_error("route uses a non-host edge");
      ++it->second;
    }
  }
  for (const auto& [h, c] : rep.per_edge) rep.max = std::max(rep.max, c);
  return rep;
}

ExactValue kmn_lower(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("kmn_lower: requires m, n >= 1");
  const std::int64_t f = static_cast<std::int64_t>(m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2);
  return zarankiewicz_constant() * ExactValue(f);
}

ExactValue multigraph_scale(std::int64_t x, const ExactValue& base) {
  if (x < 1) throw std::invalid_argument("multigraph_scale: requires x >= 1");
  return ExactValue(x) * ExactValue(x) * base;
}

ExactValue leighton_bound(const ExactValue& cr_guest_lower, std::int64_t cg, std::int64_t host_vertices,
                          std::int64_t host_max_degree) {
  if (cg < 1) throw std::invalid_argument("leighton_bound: congestion must be >= 1");
  return cr_guest_lower / ExactValue(cg * cg) -
         ExactValue::fraction(BigInt(host_vertices) * host_max_degree * host_max_degree, 2);
}

namespace {

ExactValue shrink(int m) {
  // 1 / (1 + 3/(m-1))^2 = ((m-1)/(m+2))^2
  const ExactValue q = ExactValue::fraction(m - 1, m + 2);
  return q * q;
}

void require_m(int m) {
  if (m < 4) throw std::invalid_argument("lower bounds require m >= 4");
}

}  // namespace

ExactValue lb_kmm_minus_matching(int m) {
  require_m(m);
  const std::int64_t a = m / 2, b = (m - 1) / 2;
  return zarankiewicz_constant() * shrink(m) * ExactValue(a * a * b * b) -
         ExactValue(static_cast<std::int64_t>(m) * (m - 1) * (m - 1));
}

ExactValue lb_km2m(int m) {
  require_m(m);
  const std::int64_t a = m / 2, b = (m - 1) / 2;
  return zarankiewicz_constant() * shrink(m) * ExactValue(static_cast<std::int64_t>(m) * (m - 1) * a * b) -
         ExactValue(6 * static_cast<std::int64_t>(m) * (m - 1) * (m - 1));
}

namespace {

ExactValue pipeline(const Embedding& e, int other_side) {
  const CongestionReport rep = congestion(e);
  const ExactValue guest = multigraph_scale(e.multiplicity, kmn_lower(e.m, other_side));
  return leighton_bound(guest, rep.max, e.host_vertex_count(), e.host_max_degree());
}

}  // namespace

ExactValue lb_kmm_minus_matching_pipeline(int m) {
  require_m(m);
  return pipeline(build_embedding_kmm(m), m);
}

ExactValue lb_km2m_pipeline(int m) {
  require_m(m);
  return pipeline(build_embedding_km2m(m), 2 * m);
}

LowerBound lower_bound_path(int m, int n) {
  require_m(m);
  if (n < 2) throw std::invalid_argument("lower_bound_path: requires n >= 2");
  ExactValue raw = n % 2 == 0
                       ? ExactValue::fraction(n - 2, 2) * lb_km2m(m) + lb_kmm_minus_matching(m)
                       : ExactValue::fraction(n - 1, 2) * lb_km2m(m);
  return {raw, raw.clamped_non_negative()};
}

LowerBound lower_bound_cycle(int m, int n) {
  require_m(m);
  if (n < 3) throw std::invalid_argument("lower_bound_cycle: requires n >= 3");
  ExactValue raw = n % 2 == 1
                       ? ExactValue::fraction(n - 1, 2) * lb_km2m(m) + lb_kmm_minus_matching(m)
                       : ExactValue::fraction(n, 2) * lb_km2m(m);
  return {raw, raw.clamped_non_negative()};
}

LowerBound lower_bound(Family family, int m, int n) {
  return family == Family::Path ? lower_bound_path(m, n) : lower_bound_cycle(m, n);
}

}  // namespace crossforge
