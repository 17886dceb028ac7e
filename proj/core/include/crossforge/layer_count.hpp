#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossforge/exact.hpp"
#include "crossforge/permutation.hpp"
#include "crossforge/schedules.hpp"

namespace crossforge {

/// One layer between two columns of m rings. Ring t on the left holds the
/// same K_m vertex as ring f(t) on the right, so the m pairs (t, f(t)) are the
/// missing matching; every other ordered pair (a, b) is an edge.
struct SectorModel {
  LayerPermutation matching;

  int m() const { return matching.size(); }
  /// Edges (a, b) in lexicographic order; m(m-1) of them.
  std::vector<std::pair<int, int>> edges() const;
};

/// Unordered edge pairs {(a,b),(c,d)} with (a-c)(b-d) < 0. O(m^4).
std::int64_t sector_crossings_bruteforce(const SectorModel& model);
std::int64_t sector_crossings_bruteforce(const LayerPermutation& f);

/// (m-1-t) f(t) + t (m-1-f(t)).
std::int64_t sector_summand(int m, int t, int ft);

/// C(m,2)^2 - (sum_t summand - inv(f)).
std::int64_t sector_crossings_formula(const LayerPermutation& f);

class PartitionError : public std::logic_error {
 public:
  PartitionError(const std::string& what, std::vector<int> overlapping, std::vector<int> missing)
      : std::logic_error(what), overlapping_(std::move(overlapping)), missing_(std::move(missing)) {}
  const std::vector<int>& overlapping() const { return overlapping_; }
  const std::vector<int>& missing() const { return missing_; }

 private:
  std::vector<int> overlapping_;
  std::vector<int> missing_;
};

/// The index sets S1, S2, S3 of family l at (m, n). Throws PartitionError
/// unless they partition {0..m-1}.
std::array<std::vector<int>, 3> partial_sum_sets(int l, int m, int n);

struct FPartialSums {
  int l = 0;
  int m = 0;
  int n = 0;
  std::vector<int> S1, S2, S3;
  std::int64_t F1 = 0, F2 = 0, F3 = 0;

  std::int64_t total() const { return F1 + F2 + F3; }
};

/// F_k = sum_{t in S_k} summand(t) - sum_{t in S_k} #{j > t : f(t) > f(j)},
/// by direct summation over f_l.
FPartialSums partial_sums(int l, int m, int n, ClauseReading reading = ClauseReading::Repaired);

/// How a lateral edge from ring position a to position b winds around the cylinder.
///  Unidirectional: delta = (b - a) mod m in [1, m-1].
///  ShortestTiePositive: delta in (-m/2, m/2], half turns go positive.
///  ShortestTieSourceParity: shortest, half turns positive from even a, negative from odd a.
enum class WindingRule { Unidirectional, ShortestTiePositive, ShortestTieSourceParity };

std::string to_string(WindingRule rule);
WindingRule parse_winding_rule(const std::string& text);

/// Signed angular displacement (in units of 1/m turn) for the edge a -> b, a != b.
int helix_displacement(int a, int b, int m, WindingRule rule = WindingRule::Unidirectional);

/// Crossings of helices (a1, d1) and (a2, d2) between two concentric rings of
/// m positions: the number of integers k with k*m strictly between a1 - a2 and
/// a1 - a2 + d1 - d2.
std::int64_t helix_crossings(std::int64_t a1, std::int64_t d1, std::int64_t a2, std::int64_t d2,
                             std::int64_t m);

/// K_{m,m} - mK_2 between two rings, vertex i at position i on both rings,
/// all edges drawn as helices under the given rule.
std::int64_t annulus_crossings(int m, WindingRule rule = WindingRule::Unidirectional);

/// A single printed-versus-computed disagreement.
struct DiscrepancyRecord {
  std::string lemma;
  std::map<std::string, std::int64_t> params;
  ExactValue printed;
  ExactValue computed;

  /// {"lemma":..,"params":{..},"printed":"..","computed":".."} on one line.
  std::string to_json_line() const;
};

}  // namespace crossforge
