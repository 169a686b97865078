#include "patterngf/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "patterngf/errors.hpp"

namespace patterngf {

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* env = std::getenv("PATTERNGF_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw DomainError(std::string("PATTERNGF_MAX_N is not a size: ") + env);
    config.max_n = static_cast<std::size_t>(v);
  }
  return config;
}

BigInt Census::total() const {
  BigInt t = 0;
  for (const auto& [r, c] : histogram) t += c;
  return t;
}

BigInt Census::at(const BigInt& r) const {
  auto it = histogram.find(r);
  return it == histogram.end() ? BigInt(0) : it->second;
}

namespace {

using LocalHistogram = std::map<BigInt, std::uint64_t>;

// All permutations of S_n whose first entry is `first`, in lexicographic order.
void scan_branch(std::size_t n, int first, const std::vector<Pattern>& avoid, const Pattern& count,
                 LocalHistogram& out) {
  std::vector<int> values;
  values.reserve(n);
  values.push_back(first);
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (v != first) values.push_back(v);
  do {
    const Permutation pi(values);
    const bool passes = std::all_of(avoid.begin(), avoid.end(), [&](const Pattern& p) { return avoids(pi, p); });
    if (passes) ++out[count_occurrences(pi, count)];
  } while (std::next_permutation(values.begin() + 1, values.end()));
}

}  // namespace

Census census(std::size_t n, const std::vector<Pattern>& avoid, const Pattern& count, const OracleConfig& config) {
  if (n > config.max_n) throw BoundExceeded("census size n =", static_cast<long>(n), static_cast<long>(config.max_n));
  Census result{n, avoid, count, {}};
  if (n == 0) {
    const Permutation empty;
    const bool passes = std::all_of(avoid.begin(), avoid.end(), [&](const Pattern& p) { return avoids(empty, p); });
    if (passes) result.histogram[count_occurrences(empty, count)] = 1;
    return result;
  }

  std::vector<LocalHistogram> branches(n);
  unsigned workers = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < n;)
      scan_branch(n, static_cast<int>(b) + 1, avoid, count, branches[b]);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& branch : branches)
    for (const auto& [r, c] : branch) result.histogram[r] += BigInt(static_cast<unsigned long>(c));
  return result;
}

Rational path_census(const PathQuery& query, const WeightSpec& weights, const OracleConfig& config) {
  PathStream stream(query, config.max_path_length);
  Rational total = 0;
  while (auto p = stream.next()) total += weights.peak ? weight_peaked(*p, weights) : weight_motzkin(*p, weights);
  return total;
}

std::string census_csv(const Census& c) {
  std::string out = "occurrences,count\n";
  for (const auto& [r, cnt] : c.histogram) out += r.get_str() + "," + cnt.get_str() + "\n";
  return out;
}

}  // namespace patterngf
