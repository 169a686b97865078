#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace patterngf {

/// Invalid input: a malformed permutation or path, a parameter outside a
/// formula's hypothesis, a missing weight. Maps to CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input contains a forbidden pattern; carries the 1-based positions of
/// one occurrence.
class PatternViolation : public DomainError {
 public:
  PatternViolation(const std::string& pattern, std::vector<std::size_t> positions);

  const std::string& pattern() const { return pattern_; }
  const std::vector<std::size_t>& positions() const { return positions_; }

 private:
  std::string pattern_;
  std::vector<std::size_t> positions_;
};

/// An exhaustive computation was asked to go past its configured bound.
class BoundExceeded : public DomainError {
 public:
  BoundExceeded(const std::string& what, long requested, long bound);

  long bound() const { return bound_; }

 private:
  long bound_;
};

}  // namespace patterngf
