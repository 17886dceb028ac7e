#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossforge {

/// Where a permutation came from: family index 1..8 (0 = ad hoc) and the
/// (m, n) it was built for (n = 0 when the family does not depend on n).
struct PermutationLabel {
  int family = 0;
  int m = 0;
  int n = 0;

  std::string to_string() const;
};

class NotABijection : public std::invalid_argument {
 public:
  NotABijection(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
  /// First offending position (out-of-range value or repeated value).
  int index() const { return index_; }

 private:
  int index_;
};

/// A bijection f on {0, ..., m-1}; values[t] is the image of t.
class LayerPermutation {
 public:
  /// Throws NotABijection when values is not a permutation of 0..size-1.
  explicit LayerPermutation(std::vector<int> values, PermutationLabel label = {});

  static LayerPermutation identity(int m);
  /// Parses a space-separated line such as "3 2 1 0".
  static LayerPermutation from_line(const std::string& line, PermutationLabel label = {});

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int t) const { return values_[static_cast<std::size_t>(t)]; }
  std::span<const int> values() const { return values_; }
  const PermutationLabel& label() const { return label_; }

  LayerPermutation inverse() const;
  std::string to_line() const;

  friend bool operator==(const LayerPermutation& a, const LayerPermutation& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;
  PermutationLabel label_;
};

/// |{(i, j) : i < j, p(i) > p(j)}| by merge sort, O(m log m).
std::int64_t inversion_number(const LayerPermutation& p);
std::int64_t inversion_number(std::span<const int> values);
/// Quadratic pair enumeration; the test oracle for inversion_number.
std::int64_t inversion_number_bruteforce(std::span<const int> values);

}  // namespace crossforge
