#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patterngf/numeric.hpp"

namespace patterngf {

/// A permutation of {1, ..., n} in one-line notation. The empty permutation
/// (n = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  /// Accepts a contiguous digit word ("74352681", n <= 9) or whitespace
  /// separated integers ("7 4 3 5 2 6 8 1").
  static Permutation parse(const std::string& text);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  /// Digit word for n <= 9, whitespace separated otherwise.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// A classical pattern: a permutation of {1, ..., k} with k >= 1.
class Pattern {
 public:
  explicit Pattern(Permutation values);
  static Pattern parse(const std::string& text);

  /// 12...k
  static Pattern increasing(int k);
  /// 23...k1
  static Pattern rotated_increasing(int k);
  /// (k-1)(k-2)...1k
  static Pattern decreasing_then_max(int k);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const Permutation& permutation() const { return values_; }
  std::string to_string() const { return values_.to_string(); }

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;

 private:
  Permutation values_;
};

struct Entry {
  std::size_t position;  // 0-based
  int value;
  bool operator==(const Entry&) const = default;
};

BigInt count_occurrences(const Permutation& pi, const Pattern& sigma);

/// First occurrence in lexicographic order of index tuples (0-based).
std::optional<std::vector<std::size_t>> find_occurrence(const Permutation& pi, const Pattern& sigma);

bool avoids(const Permutation& pi, const Pattern& sigma);

/// Throws PatternViolation (1-based positions) when pi contains sigma.
void require_avoids(const Permutation& pi, const Pattern& sigma);

std::vector<Entry> left_to_right_minima(const Permutation& pi);
std::vector<Entry> right_to_left_maxima(const Permutation& pi);

}  // namespace patterngf
