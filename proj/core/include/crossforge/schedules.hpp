#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "crossforge/kron_graph.hpp"
#include "crossforge/permutation.hpp"

namespace crossforge {

/// r = floor(m/n), s = m mod n, s0 = (n-1)/2, s1 = floor(s/2).
struct ScheduleParams {
  int m = 0;
  int n = 0;
  int r = 0;
  int s = 0;
  int s0 = 0;
  int s1 = 0;

  /// s0 * r, the start of the middle block in the f4..f8 clause systems.
  int R() const { return s0 * r; }

  static ScheduleParams compute(int m, int n);
};

/// Repaired: the clause system with the transcription fixes recorded in the
/// conformance file. AsPrinted: the clauses transcribed literally; it raises
/// ClauseError wherever the literal system is inconsistent.
enum class ClauseReading { Repaired, AsPrinted };

std::string to_string(ClauseReading reading);
ClauseReading parse_clause_reading(const std::string& text);

class ClauseError : public std::runtime_error {
 public:
  enum class Kind { Uncovered, DoublyDefined, NotBijection };

  ClauseError(Kind kind, int family, int index, std::vector<std::string> clauses,
              const std::string& what)
      : std::runtime_error(what), kind_(kind), family_(family), index_(index),
        clauses_(std::move(clauses)) {}

  Kind kind() const { return kind_; }
  int family() const { return family_; }
  int index() const { return index_; }
  /// Clause ids involved, e.g. {"f4.1", "f4.2"} for a double definition.
  const std::vector<std::string>& clauses() const { return clauses_; }

 private:
  Kind kind_;
  int family_;
  int index_;
  std::vector<std::string> clauses_;
};

/// f1, f2 or f3 on m points (m >= 2; f3 needs even m to be a bijection).
LayerPermutation base_permutation(int l, int m);

/// A permutation of one of f4..f8 together with the clause that defined each index.
struct ClauseTrace {
  LayerPermutation permutation;
  std::vector<std::string> clause_of;  // clause id per index t
};

/// f4..f8 for m > n, odd n >= 3. Every index must be defined by exactly one
/// applicable clause; otherwise ClauseError names the index and the clauses.
ClauseTrace extended_permutation_trace(int l, int m, int n,
                                       ClauseReading reading = ClauseReading::Repaired);
LayerPermutation extended_permutation(int l, int m, int n,
                                      ClauseReading reading = ClauseReading::Repaired);

/// Whether family l is defined at (m, n) under the repaired clauses: f1, f2
/// always, f3 for even m; f4, f6, f8 whenever m > odd n; f5 needs even s and
/// f7 odd s.
bool is_admissible(int l, int m, int n);

/// How the alternating families are laid out on the first / last layers.
///  LayerParity: even s -> f4 at even j, f5 at odd j (j < s);
///               odd s  -> f8 at even j, f7 at odd j (j >= s).
///  BlockOffset: even s -> f5 at even j, f4 at odd j;
///               odd s  -> f8 when (j - s) is even, f7 otherwise.
/// Both give the same multiset of layer families; only LayerParity closes
/// the column contents around the cycle in every case.
enum class AlternationReading { LayerParity, BlockOffset };

std::string to_string(AlternationReading reading);
AlternationReading parse_alternation_reading(const std::string& text);

struct ScheduleAssignment {
  int m = 0;
  int n = 0;
  Family family = Family::Cycle;
  std::vector<LayerPermutation> per_layer;

  /// Family index of each layer's permutation.
  std::vector<int> families() const;
};

/// Per-layer permutations of the cycle drawing: even n -> f1 everywhere;
/// m <= odd n -> f2 (odd m) or f3/f2 alternating (even m) on j < m, f1 after;
/// m > odd n -> the f4..f8 rules. Requires m >= 4, n >= 3 and Family::Cycle.
ScheduleAssignment schedule_for(int m, int n, Family family = Family::Cycle,
                                AlternationReading alternation = AlternationReading::LayerParity,
                                ClauseReading clauses = ClauseReading::Repaired);

/// Column contents i_{j,t}: the K_m vertex on ring t of column j, propagated
/// from i_{0,t} = t by i_{j-1,t} = i_{j, f^j(t)} (j taken modulo n).
std::vector<std::vector<int>> column_contents(const ScheduleAssignment& schedule);

/// True when propagating once around the cycle is consistent with f^0, i.e.
/// i_{n-1,t} = i_{0, f^0(t)} for all t.
bool schedule_closes(const ScheduleAssignment& schedule);

}  // namespace crossforge
