#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patterngf/oracle.hpp"

namespace patterngf {

enum class Suite { Bijections, Series, Appendix, Asymptotics, All };

/// Throws DomainError for an unknown name.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct VerifyOptions {
  std::size_t max_n = 9;
  /// Random rational weight draws for the path suites.
  unsigned weight_draws = 10;
  std::uint64_t seed = 20131017;
  OracleConfig oracle = OracleConfig::from_environment();
};

struct CheckOutcome {
  std::string suite;
  /// Acceptance criterion the check belongs to (1-7).
  int criterion;
  std::string name;
  bool passed;
  /// First counterexample on failure, a short summary otherwise.
  std::string detail;
};

/// Runs every check of the suite against the brute-force oracle. Checks do
/// not throw; an unexpected exception is reported as a failed check.
std::vector<CheckOutcome> run_suite(Suite suite, const VerifyOptions& options = VerifyOptions{});

}  // namespace patterngf
