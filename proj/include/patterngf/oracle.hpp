#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patterngf/lattice_path.hpp"
#include "patterngf/numeric.hpp"
#include "patterngf/permutation.hpp"

namespace patterngf {

struct OracleConfig {
  /// Largest n for permutation censuses.
  std::size_t max_n = 11;
  /// Longest path for path censuses.
  std::size_t max_path_length = kDefaultPathBound;
  /// Worker threads for censuses; 0 picks the hardware concurrency.
  unsigned threads = 0;

  /// Defaults, with PATTERNGF_MAX_N overriding max_n when set.
  static OracleConfig from_environment();
};

/// Histogram of the occurrence count of one pattern over the permutations of
/// S_n avoiding every pattern of a filter set.
struct Census {
  std::size_t n = 0;
  std::vector<Pattern> avoid;
  std::optional<Pattern> count;
  std::map<BigInt, BigInt> histogram;

  BigInt total() const;
  /// histogram[r], or 0.
  BigInt at(const BigInt& r) const;
};

/// Exhaustive scan of S_n in lexicographic order. The scan is split by first
/// entry across worker threads and merged by exact addition, so the result
/// does not depend on the worker count. Throws BoundExceeded when
/// n > config.max_n.
Census census(std::size_t n, const std::vector<Pattern>& avoid, const Pattern& count,
              const OracleConfig& config = OracleConfig{});

/// Sum of path weights over every path matching the query: weight_peaked when
/// the weights carry peak entries, weight_motzkin otherwise.
Rational path_census(const PathQuery& query, const WeightSpec& weights, const OracleConfig& config = OracleConfig{});

/// "occurrences,count" lines under a header.
std::string census_csv(const Census& c);

}  // namespace patterngf
