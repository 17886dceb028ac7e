#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossforge/closed_forms.hpp"
#include "crossforge/layer_count.hpp"
#include "crossforge/schedules.hpp"

namespace crossforge {

enum class CellStatus { Match, Mismatch, NotApplicable };
std::string to_string(CellStatus status);

/// One comparison: the closed form ("printed") against its oracle
/// ("computed"). For inequality checks printed is the bound and the cell
/// matches when computed <= printed.
struct VerificationCell {
  std::string lemma;
  int m = 0;
  std::optional<int> n;
  std::optional<int> l;
  std::string branch;
  std::optional<ExactValue> printed;
  std::optional<ExactValue> computed;
  CellStatus status = CellStatus::NotApplicable;
};

struct VerifyOptions {
  std::vector<std::string> lemmas;  // ids from verifiable_lemmas(), or {"all"}
  int m_lo = 4, m_hi = 12;
  int n_lo = 3, n_hi = 9;
  SignReading sign = SignReading::ExponentS;
  ClauseReading clauses = ClauseReading::Repaired;
  AlternationReading alternation = AlternationReading::LayerParity;
  int threads = 0;  // 0: CROSSFORGE_THREADS or hardware concurrency
};

struct VerificationReport {
  std::vector<std::string> lemmas;
  int m_lo = 0, m_hi = 0, n_lo = 0, n_hi = 0;
  std::vector<VerificationCell> cells;

  std::size_t count(CellStatus status) const;
  bool all_match() const { return count(CellStatus::Mismatch) == 0; }
  std::vector<DiscrepancyRecord> discrepancies() const;

  /// Header lemma,m,n,l,branch,printed,computed,status.
  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

/// Identifiers accepted by verify_sweep, in report order.
const std::vector<std::string>& verifiable_lemmas();

/// The pinned desk-scale grid used by `verify --quick`.
VerifyOptions quick_options();

/// Runs every requested check over the grid. Cells are evaluated in
/// parallel and assembled in a fixed order (lemma, m, n, l, branch).
/// Throws std::invalid_argument for unknown ids or empty ranges.
VerificationReport verify_sweep(const VerifyOptions& options);

/// Layer-wise sum of brute-force sector counts under the cycle schedule.
std::int64_t schedule_total(int m, int n, AlternationReading alternation = AlternationReading::LayerParity,
                            ClauseReading clauses = ClauseReading::Repaired);

/// Thread count from CROSSFORGE_THREADS (if set and positive) or the hardware.
int default_thread_count();

}  // namespace crossforge
