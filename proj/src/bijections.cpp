#include "patterngf/bijections.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "patterngf/errors.hpp"

namespace patterngf {

namespace {

const Pattern& pattern_132() {
  static const Pattern p = Pattern::parse("132");
  return p;
}

const Pattern& pattern_123() {
  static const Pattern p = Pattern::parse("123");
  return p;
}

void append(std::vector<Step>& steps, Step s, long count) {
  for (long i = 0; i < count; ++i) steps.push_back(s);
}

// Maximal runs U^{a_1} D^{d_1} ... U^{a_s} D^{d_s} of a closed Dyck path.
std::vector<std::pair<int, int>> up_down_runs(const LatticePath& p) {
  if (!p.is_closed_dyck()) throw DomainError("expected a closed Dyck path, got '" + p.to_string() + "'");
  std::vector<std::pair<int, int>> runs;
  std::size_t i = 0;
  while (i < p.length()) {
    int ups = 0, downs = 0;
    while (i < p.length() && p[i] == Step::Up) ++ups, ++i;
    while (i < p.length() && p[i] == Step::Down) ++downs, ++i;
    runs.emplace_back(ups, downs);
  }
  return runs;
}

}  // namespace

LatticePath reflect(const LatticePath& p) {
  std::vector<Step> steps(p.steps().rbegin(), p.steps().rend());
  for (Step& s : steps) {
    if (s == Step::Up) s = Step::Down;
    else if (s == Step::Down) s = Step::Up;
  }
  return LatticePath(std::move(steps), p.end_height());
}

LatticePath phi(const Permutation& pi) {
  require_avoids(pi, pattern_132());
  const std::size_t n = pi.size();
  std::vector<Step> steps;
  steps.reserve(2 * n);
  int height = 0;
  for (std::size_t j = 0; j < n; ++j) {
    int larger_later = 0;
    for (std::size_t i = j + 1; i < n; ++i) larger_later += pi[i] > pi[j];
    append(steps, Step::Up, larger_later + 1 - height);
    steps.push_back(Step::Down);
    height = larger_later;
  }
  return LatticePath(std::move(steps));
}

LatticePath phi_via_minima(const Permutation& pi) {
  require_avoids(pi, pattern_132());
  const auto minima = left_to_right_minima(pi);
  std::vector<Step> steps;
  steps.reserve(2 * pi.size());
  int previous = static_cast<int>(pi.size()) + 1;
  for (std::size_t i = 0; i < minima.size(); ++i) {
    const std::size_t next_pos = i + 1 < minima.size() ? minima[i + 1].position : pi.size();
    const auto word_length = static_cast<long>(next_pos - minima[i].position - 1);
    append(steps, Step::Up, previous - minima[i].value);
    append(steps, Step::Down, word_length + 1);
    previous = minima[i].value;
  }
  return LatticePath(std::move(steps));
}

Permutation phi_inverse(const LatticePath& p) {
  const auto runs = up_down_runs(p);
  const int n = static_cast<int>(p.length() / 2);
  // Minima values and the lengths of the words that follow them.
  std::vector<int> minima;
  std::vector<int> word_lengths;
  int current = n + 1;
  for (auto [ups, downs] : runs) {
    current -= ups;
    minima.push_back(current);
    word_lengths.push_back(downs - 1);
  }
  std::set<int> unused;
  for (int v = 1; v <= n; ++v) unused.insert(v);
  for (int m : minima) unused.erase(m);
  // In a 132-avoider each non-minimum entry is the smallest unused value
  // above the current left-to-right minimum.
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < minima.size(); ++i) {
    values.push_back(minima[i]);
    for (int w = 0; w < word_lengths[i]; ++w) {
      auto it = unused.upper_bound(minima[i]);
      if (it == unused.end()) throw DomainError("path is not in the image of phi");
      values.push_back(*it);
      unused.erase(it);
    }
  }
  return Permutation(std::move(values));
}

LatticePath psi(const Permutation& pi) {
  require_avoids(pi, pattern_123());
  const auto maxima = right_to_left_maxima(pi);
  std::vector<Step> steps;
  steps.reserve(2 * pi.size());
  int previous = 0;
  // maxima are stored by position; the decomposition is read from the right.
  for (std::size_t r = maxima.size(); r-- > 0;) {
    const std::size_t prev_pos = r > 0 ? maxima[r - 1].position + 1 : 0;
    const auto word_length = static_cast<long>(maxima[r].position - prev_pos);
    append(steps, Step::Up, maxima[r].value - previous);
    append(steps, Step::Down, word_length + 1);
    previous = maxima[r].value;
  }
  return reflect(LatticePath(std::move(steps)));
}

Permutation psi_inverse(const LatticePath& p) {
  const auto runs = up_down_runs(reflect(p));
  const int n = static_cast<int>(p.length() / 2);
  // runs[i] describes m_{i+1} and w_{i+1} in pi = w_s m_s ... w_1 m_1.
  std::vector<int> maxima;
  int current = 0;
  for (auto [ups, downs] : runs) {
    current += ups;
    maxima.push_back(current);
  }
  std::vector<bool> is_max(static_cast<std::size_t>(n) + 1, false);
  for (int m : maxima) is_max[m] = true;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!is_max[v]) rest.push_back(v);
  // w_1 takes the smallest remaining values, w_2 the next ones, and so on;
  // each word is decreasing.
  std::vector<std::vector<int>> words;
  std::size_t next = 0;
  for (auto [ups, downs] : runs) {
    std::vector<int> w(rest.begin() + static_cast<long>(next), rest.begin() + static_cast<long>(next + downs - 1));
    next += static_cast<std::size_t>(downs - 1);
    std::reverse(w.begin(), w.end());
    words.push_back(std::move(w));
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = maxima.size(); i-- > 0;) {
    values.insert(values.end(), words[i].begin(), words[i].end());
    values.push_back(maxima[i]);
  }
  return Permutation(std::move(values));
}

Permutation convert_123_to_132(const Permutation& pi) { return phi_inverse(psi(pi)); }

}  // namespace patterngf
