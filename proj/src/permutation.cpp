#include "patterngf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "patterngf/errors.hpp"

namespace patterngf {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = static_cast<int>(values_.size());
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw DomainError("not a permutation of 1.." + std::to_string(n) + ": offending value " +
                        std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> values;
  const bool has_space = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  if (has_space) {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw DomainError("malformed permutation '" + text + "'");
      values.push_back(std::stoi(token));
    }
  } else {
    for (unsigned char c : text) {
      if (!std::isdigit(c)) throw DomainError("malformed permutation '" + text + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Pattern::Pattern(Permutation values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("a pattern must have at least one element");
}

Pattern Pattern::parse(const std::string& text) { return Pattern(Permutation::parse(text)); }

Pattern Pattern::increasing(int k) {
  if (k < 1) throw DomainError("pattern length must be positive");
  return Pattern(Permutation::identity(static_cast<std::size_t>(k)));
}

Pattern Pattern::rotated_increasing(int k) {
  if (k < 1) throw DomainError("pattern length must be positive");
  std::vector<int> v;
  for (int i = 2; i <= k; ++i) v.push_back(i);
  v.push_back(1);
  return Pattern(Permutation(std::move(v)));
}

Pattern Pattern::decreasing_then_max(int k) {
  if (k < 1) throw DomainError("pattern length must be positive");
  std::vector<int> v;
  for (int i = k - 1; i >= 1; --i) v.push_back(i);
  v.push_back(k);
  return Pattern(Permutation(std::move(v)));
}

namespace {

// Depth-first scan over increasing index tuples. A partial tuple is extended
// only while it stays order-isomorphic to the matching prefix of the pattern.
class OccurrenceScan {
 public:
  OccurrenceScan(const Permutation& pi, const Pattern& sigma) : pi_(pi), sigma_(sigma), chosen_(sigma.size()) {}

  template <class Visit>
  bool run(Visit&& visit) {
    if (sigma_.size() > pi_.size()) return false;
    return extend(0, 0, visit);
  }

 private:
  template <class Visit>
  bool extend(std::size_t depth, std::size_t from, Visit& visit) {
    const std::size_t k = sigma_.size();
    if (depth == k) return visit(chosen_);
    const std::size_t last = pi_.size() - (k - depth);
    for (std::size_t i = from; i <= last; ++i) {
      if (!consistent(depth, pi_[i])) continue;
      chosen_[depth] = i;
      if (extend(depth + 1, i + 1, visit)) return true;
    }
    return false;
  }

  bool consistent(std::size_t depth, int value) const {
    const int target = sigma_[depth];
    for (std::size_t j = 0; j < depth; ++j)
      if ((value > pi_[chosen_[j]]) != (target > sigma_[j])) return false;
    return true;
  }

  const Permutation& pi_;
  const Pattern& sigma_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

BigInt count_occurrences(const Permutation& pi, const Pattern& sigma) {
  // Bounded by C(n, k), which fits 64 bits for every size this scan can finish.
  std::uint64_t count = 0;
  OccurrenceScan(pi, sigma).run([&](const std::vector<std::size_t>&) {
    ++count;
    return false;
  });
  BigInt result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return result;
}

std::optional<std::vector<std::size_t>> find_occurrence(const Permutation& pi, const Pattern& sigma) {
  std::optional<std::vector<std::size_t>> found;
  OccurrenceScan(pi, sigma).run([&](const std::vector<std::size_t>& idx) {
    found = idx;
    return true;
  });
  return found;
}

bool avoids(const Permutation& pi, const Pattern& sigma) { return !find_occurrence(pi, sigma).has_value(); }

void require_avoids(const Permutation& pi, const Pattern& sigma) {
  if (auto occ = find_occurrence(pi, sigma)) {
    for (auto& p : *occ) ++p;
    throw PatternViolation(sigma.to_string(), std::move(*occ));
  }
}

std::vector<Entry> left_to_right_minima(const Permutation& pi) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (out.empty() || pi[i] < out.back().value) out.push_back({i, pi[i]});
  return out;
}

std::vector<Entry> right_to_left_maxima(const Permutation& pi) {
  std::vector<Entry> out;
  for (std::size_t i = pi.size(); i-- > 0;)
    if (out.empty() || pi[i] > out.back().value) out.push_back({i, pi[i]});
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace patterngf
