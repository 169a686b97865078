#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/permutation.hpp"

using namespace patterngf;

namespace {

// Brute force over index subsets, comparing relative orders directly.
long naive_count(const std::vector<int>& pi, const std::vector<int>& sigma) {
  const std::size_t n = pi.size(), k = sigma.size();
  if (k > n) return 0;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  long total = 0;
  do {
    std::vector<int> picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) picked.push_back(pi[i]);
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = 0; b < k && ok; ++b)
        if ((picked[a] < picked[b]) != (sigma[a] < sigma[b])) ok = false;
    total += ok;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return total;
}

std::vector<int> values_of(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

std::vector<int> entry_values(const std::vector<Entry>& es) {
  std::vector<int> out;
  for (const auto& e : es) out.push_back(e.value);
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(Permutation::parse("74352681").size() == 8);
  CHECK(Permutation::parse("7 4 3 5 2 6 8 1") == Permutation::parse("74352681"));
  CHECK(Permutation::parse("10 9 8 7 6 5 4 3 2 1").to_string() == "10 9 8 7 6 5 4 3 2 1");
  CHECK(Permutation::parse("").empty());
  CHECK_THROWS_AS(Permutation::parse("1224"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("0123"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("13"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("1a2"), DomainError);
  CHECK_THROWS_AS(Pattern::parse(""), DomainError);
  CHECK(Pattern::increasing(4).to_string() == "1234");
  CHECK(Pattern::rotated_increasing(4).to_string() == "2341");
  CHECK(Pattern::decreasing_then_max(4).to_string() == "3214");
  CHECK(Pattern::rotated_increasing(2).to_string() == "21");
  CHECK(Pattern::decreasing_then_max(2).to_string() == "12");
}

TEST_CASE("occurrence counts") {
  CHECK(count_occurrences(Permutation::parse("74352681"), Pattern::parse("123")) == 8);
  CHECK(count_occurrences(Permutation::parse("58327641"), Pattern::parse("213")) == 7);
  CHECK(count_occurrences(Permutation::parse("321"), Pattern::parse("12")) == 0);
  CHECK(count_occurrences(Permutation::parse("12"), Pattern::parse("123")) == 0);
  CHECK(count_occurrences(Permutation::identity(10), Pattern::increasing(4)) == 210);
}

TEST_CASE("occurrence counts agree with subset enumeration on S_6") {
  const std::vector<std::string> patterns{"1", "12", "21", "132", "231", "2413", "3214", "12345"};
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  do {
    const Permutation pi(v);
    for (const auto& s : patterns) {
      const Pattern sigma = Pattern::parse(s);
      const long want = naive_count(v, values_of(sigma.permutation()));
      REQUIRE(count_occurrences(pi, sigma) == want);
      CHECK(avoids(pi, sigma) == (want == 0));
    }
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("avoidance and witnesses") {
  CHECK(avoids(Permutation::parse("74352681"), Pattern::parse("132")));
  CHECK(avoids(Permutation::parse("58327641"), Pattern::parse("123")));
  CHECK_FALSE(avoids(Permutation::parse("132"), Pattern::parse("132")));

  const auto w = find_occurrence(Permutation::parse("2413"), Pattern::parse("132"));
  REQUIRE(w);
  CHECK(*w == std::vector<std::size_t>{0, 1, 3});
  CHECK_FALSE(find_occurrence(Permutation::parse("321"), Pattern::parse("12")));

  try {
    require_avoids(Permutation::parse("132"), Pattern::parse("132"));
    FAIL("expected a violation");
  } catch (const PatternViolation& e) {
    CHECK(e.positions() == std::vector<std::size_t>{1, 2, 3});
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
}

TEST_CASE("left-to-right minima and right-to-left maxima") {
  CHECK(entry_values(left_to_right_minima(Permutation::parse("74352681"))) == std::vector<int>{7, 4, 3, 2, 1});
  CHECK(entry_values(left_to_right_minima(Permutation::parse("12345"))) == std::vector<int>{1});
  CHECK(entry_values(left_to_right_minima(Permutation::parse("54321"))) == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(entry_values(right_to_left_maxima(Permutation::parse("58327641"))) == std::vector<int>{8, 7, 6, 4, 1});
  CHECK(entry_values(right_to_left_maxima(Permutation::parse("54321"))) == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(entry_values(right_to_left_maxima(Permutation::parse("12345"))) == std::vector<int>{5});
  const auto minima = left_to_right_minima(Permutation::parse("74352681"));
  CHECK(minima[3] == Entry{4, 2});
}
