#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossforge/exact.hpp"
#include "crossforge/kron_graph.hpp"

namespace crossforge {

struct BoundsRow {
  int m = 0;
  int n = 0;
  Family family = Family::Cycle;
  ExactValue lower_raw;
  ExactValue lower_clamped;
  ExactValue upper;
  std::string upper_branch;
  bool upper_exact = false;             // upper is a known crossing number
  std::optional<ExactValue> drawing;    // crossings of the explicit drawing, when there is one

  /// lower_clamped / upper to six decimals; empty when upper is 0.
  std::string ratio() const;
};

/// Rows in (m asc, n asc) order. Lower bounds need m >= 4 (0 below that).
/// Throws DeferredCase for path rows with n in {2, 3} and
/// std::invalid_argument for empty ranges.
std::vector<BoundsRow> bounds_table(Family family, int m_lo, int m_hi, int n_lo, int n_hi);

/// Header m,n,family,lower_raw,lower_clamped,upper,ratio,drawing.
std::string bounds_csv(const std::vector<BoundsRow>& rows);
nlohmann::ordered_json bounds_json(const std::vector<BoundsRow>& rows);

}  // namespace crossforge
