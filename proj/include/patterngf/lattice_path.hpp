#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patterngf/numeric.hpp"

namespace patterngf {

/// Step alphabet. The enumerator's lexicographic order follows declaration
/// order: Up < Level < Down.
enum class Step : unsigned char { Up, Level, Down };

char to_char(Step s);

/// Up/level/down path whose running height never drops below zero. A Dyck
/// path is one without level steps; it is closed when it starts and ends at
/// height 0.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws DomainError naming the first prefix that dips below zero.
  LatticePath(std::vector<Step> steps, int start_height = 0);

  /// Parses a word over {U, L, D}.
  static LatticePath parse(const std::string& text, int start_height = 0);

  std::size_t length() const { return steps_.size(); }
  const std::vector<Step>& steps() const { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }
  int start_height() const { return start_height_; }
  int end_height() const;
  /// heights()[i] is the height before step i; size length()+1.
  std::vector<int> heights() const;
  int max_height() const;

  bool is_dyck() const;
  bool is_closed_dyck() const;

  std::string to_string() const;

  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
  int start_height_ = 0;
};

struct Peak {
  std::size_t index;  // index of the up-step
  int height;         // apex height
  bool operator==(const Peak&) const = default;
};

std::vector<Peak> peaks(const LatticePath& p);

/// Sum over down-steps d of C(i(d) - 1, k - 1), i(d) the start height of d.
BigInt weight_w1(int k, const LatticePath& p);
/// Sum over peaks of C(apex - 1, k - 1).
BigInt weight_w2(int k, const LatticePath& p);

/// Per-height step weights: b_h on level steps at height h, lambda_h on
/// down-steps from h to h-1, and optionally nu_h on down-steps that close a
/// peak at height h.
struct WeightSpec {
  std::map<int, Rational> level;
  std::map<int, Rational> down;
  std::optional<std::map<int, Rational>> peak;

  /// Same b and lambda at every height 0..max_height.
  static WeightSpec uniform(const Rational& b, const Rational& lambda, int max_height);
  /// nu and lambda at every height 1..max_height.
  static WeightSpec uniform_peaked(const Rational& nu, const Rational& lambda, int max_height);
};

/// Product of step weights: up 1, level at h -> b_h, down from h -> lambda_h.
Rational weight_motzkin(const LatticePath& p, const WeightSpec& w);
/// Product over down-steps of nu_h (after an up-step) or lambda_h.
Rational weight_peaked(const LatticePath& p, const WeightSpec& w);

enum class PathKind { Dyck, Motzkin };

struct PathQuery {
  std::size_t length = 0;
  PathKind kind = PathKind::Dyck;
  std::optional<int> max_height;
  int from = 0;
  int to = 0;
};

inline constexpr std::size_t kDefaultPathBound = 24;

/// Depth-first stream over every path matching a query, in lexicographic
/// step order. Memory is O(length); each stream is independent.
class PathStream {
 public:
  /// Throws BoundExceeded when query.length > bound.
  explicit PathStream(PathQuery query, std::size_t bound = kDefaultPathBound);

  std::optional<LatticePath> next();

 private:
  bool feasible(int height, std::size_t remaining) const;
  bool push(Step s);
  void descend();
  LatticePath current() const;

  PathQuery query_;
  std::vector<Step> steps_;
  std::vector<int> heights_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LatticePath> enumerate_paths(const PathQuery& query, std::size_t bound = kDefaultPathBound);

}  // namespace patterngf
