#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossforge/exact.hpp"
#include "crossforge/kron_graph.hpp"

namespace crossforge {

/// Raised for path shapes with n in {2, 3}, which have no construction here.
class DeferredCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n * m(m-1)(m-2)(3m-5)/12, the f1 count on every one of n layers.
ExactValue cycle_base(int m, int n);

// ---- path drawings ---------------------------------------------------------

/// The per-layer counts of the path drawing, evaluated from the sum
/// expressions (not the closed form).
struct PathComponents {
  ExactValue interior;  // nu(E^1) = m * sum_{j=0}^{m-3} sum_{i=0}^{j} i
  ExactValue savings;   // m * sum_j (sum_i i - 1), the end-layer reduction
  ExactValue end;       // nu(E^0) = interior - savings
  ExactValue total;     // 2 * end + (n - 3) * interior
};

/// Requires m >= 4, n >= 4.
PathComponents path_components(int m, int n);
/// Closed form of the path drawing count (odd / even m branches).
ExactValue nu_path_drawing(int m, int n);
/// 0 for m <= 3, nu_path_drawing otherwise; throws DeferredCase for n < 4.
ExactValue upper_bound_path(int m, int n);

// ---- single layers ---------------------------------------------------------

/// Layer count for f1 (any m), f2 (+ (m-1)/2 odd m, + (m-2)/2 even m) and
/// f3 (+ m/2, even m). Throws std::domain_error on a parity violation.
ExactValue nu_layer_closed(int l, int m);

// ---- cycle drawings --------------------------------------------------------

enum class CycleBranch { EvenN, SmallOddN, LargeS1, LargeSNot1 };
std::string to_string(CycleBranch branch);

/// The sign factor in the s != 1 branch of the m > odd n count:
///  ExponentS:       (-1)^(m - n*floor(m/n))   (= (-1)^s)
///  ExponentProduct: (-1)^((m - n)*floor(m/n))
///  Literal:         (-1)^(m - n) * floor(m/n)
enum class SignReading { ExponentS, ExponentProduct, Literal };
std::string to_string(SignReading reading);
SignReading parse_sign_reading(const std::string& text);

struct BranchValue {
  ExactValue value;
  CycleBranch branch;
};

/// Count of the cycle drawing for m >= 4, n >= 3.
BranchValue nu_cycle_drawing_branch(int m, int n,
                                    SignReading reading = SignReading::ExponentS);
ExactValue nu_cycle_drawing(int m, int n, SignReading reading = SignReading::ExponentS);

/// The m > odd n closed form alone (both s branches); requires m > n, odd n >= 3.
ExactValue large_m_closed(int m, int n, SignReading reading = SignReading::ExponentS);

enum class UpperBranch { SmallM, EvenN, SmallOddN, NThree, OddNAtLeast5 };
std::string to_string(UpperBranch branch);

struct UpperBound {
  ExactValue value;
  UpperBranch branch;
  bool exact = false;  // true when the value is a known crossing number
};

/// Piecewise upper bound on cr(K_m x C_n). m <= 3 gives the stored small-case values.
UpperBound upper_bound_cycle_branch(int m, int n);
ExactValue upper_bound_cycle(int m, int n);

/// n = 3: base + (28m^3 - 54m^2 + 42m + 16)/108 as stated.
ExactValue n3_stated_bound(int m);
/// n = 3, s = 1: base + (28m^3 - 54m^2 + 42m - 16)/108, the value the derivation reaches.
ExactValue n3_s1_derivation(int m);
/// Odd n >= 5: base + m^3/4.
ExactValue odd_n_relaxed_bound(int m, int n);

struct SmallCase {
  ExactValue value;
  bool exact = false;  // false: value is an upper bound only
  std::string note;
};

/// Path m <= 3: 0. Cycle m <= 2: 0; K3 x C3: 3; K3 x C_n: 6n - 18 for 3 < n < 9, 3n for n >= 9.
SmallCase small_case_values(int m, int n, Family family);

// ---- printed partial-sum closed forms -------------------------------------

/// F_{l,1}: "statement" uses -2m*s0, "proof" uses -2(m+2)*s0.
std::vector<std::pair<std::string, ExactValue>> printed_F1(int m, int n);
ExactValue printed_F2(int l, int m, int n);
/// Every printed expression applicable to (l, m, n), keyed by variant
/// ("statement" or "proof"); empty when no expression covers the case.
std::vector<std::pair<std::string, ExactValue>> printed_F3(int l, int m, int n);

}  // namespace crossforge
