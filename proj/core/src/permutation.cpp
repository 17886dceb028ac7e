#include "crossforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crossforge {

std::string PermutationLabel::to_string() const {
  if (family == 0) return "custom";
  std::string out = "f" + std::to_string(family) + "(m=" + std::to_string(m);
  if (n > 0) out += ",n=" + std::to_string(n);
  return out + ")";
}

LayerPermutation::LayerPermutation(std::vector<int> values, PermutationLabel label)
    : values_(std::move(values)), label_(label) {
  const int m = size();
  std::vector<int> seen_at(values_.size(), -1);
  for (int t = 0; t < m; ++t) {
    const int v = values_[static_cast<std::size_t>(t)];
    if (v < 0 || v >= m) {
      throw NotABijection("not a bijection: value " + std::to_string(v) + " at index " +
                              std::to_string(t) + " is outside [0, " + std::to_string(m) + ")",
                          t);
    }
    int& prev = seen_at[static_cast<std::size_t>(v)];
    if (prev >= 0) {
      throw NotABijection("not a bijection: value " + std::to_string(v) + " appears at indices " +
                              std::to_string(prev) + " and " + std::to_string(t),
                          t);
    }
    prev = t;
  }
}

LayerPermutation LayerPermutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return LayerPermutation(std::move(v));
}

LayerPermutation LayerPermutation::from_line(const std::string& line, PermutationLabel label) {
  std::istringstream is(line);
  std::vector<int> v;
  int x = 0;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw std::invalid_argument("malformed permutation line: '" + line + "'");
  return LayerPermutation(std::move(v), label);
}

LayerPermutation LayerPermutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int t = 0; t < size(); ++t) inv[static_cast<std::size_t>((*this)(t))] = t;
  return LayerPermutation(std::move(inv));
}

std::string LayerPermutation::to_line() const {
  std::string out;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(values_[t]);
  }
  return out;
}

namespace {

std::int64_t sort_count(std::vector<int>& a, std::vector<int>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = sort_count(a, buf, lo, mid) + sort_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      count += static_cast<std::int64_t>(mid - i);
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

std::int64_t inversion_number(std::span<const int> values) {
  std::vector<int> a(values.begin(), values.end());
  std::vector<int> buf(a.size());
  return sort_count(a, buf, 0, a.size());
}

std::int64_t inversion_number(const LayerPermutation& p) { return inversion_number(p.values()); }

std::int64_t inversion_number_bruteforce(std::span<const int> values) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++count;
    }
  }
  return count;
}

}  // namespace crossforge
