#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/lattice_path.hpp"

using namespace patterngf;

namespace {

BigInt motzkin_number(std::size_t n) {
  std::vector<BigInt> m{1, 1};
  for (std::size_t i = 1; m.size() <= n; ++i) {
    BigInt next = m[i];
    for (std::size_t j = 0; j + 1 <= i; ++j) next += m[j] * m[i - 1 - j];
    m.push_back(next);
  }
  return m[n];
}

std::vector<int> apexes(const LatticePath& p) {
  std::vector<int> out;
  for (const auto& pk : peaks(p)) out.push_back(pk.height);
  return out;
}

const LatticePath kFigure1 = LatticePath::parse("UUDUUUDUDDUDDDUD");

}  // namespace

TEST_CASE("construction and validation") {
  const LatticePath p = LatticePath::parse("UULDD");
  CHECK(p.length() == 5);
  CHECK(p.heights() == std::vector<int>{0, 1, 2, 2, 1, 0});
  CHECK(p.max_height() == 2);
  CHECK_FALSE(p.is_dyck());
  CHECK(kFigure1.is_closed_dyck());
  CHECK(LatticePath::parse("").is_closed_dyck());
  CHECK_FALSE(LatticePath::parse("UUD").is_closed_dyck());
  CHECK(LatticePath::parse("DU", 1).end_height() == 1);
  CHECK_THROWS_AS(LatticePath::parse("UDDU"), DomainError);
  CHECK_THROWS_AS(LatticePath::parse("UXD"), DomainError);
  CHECK(p.to_string() == "UULDD");
}

TEST_CASE("peaks") {
  CHECK(apexes(kFigure1) == std::vector<int>{2, 4, 4, 3, 1});
  CHECK(apexes(LatticePath::parse("UDUDUD")) == std::vector<int>{1, 1, 1});
  CHECK(apexes(LatticePath::parse("UUUDDD")) == std::vector<int>{3});
  CHECK(peaks(LatticePath::parse("UUUDDD"))[0].index == 2);
}

TEST_CASE("binomial weights") {
  CHECK(weight_w1(3, kFigure1) == 8);
  CHECK(weight_w1(2, LatticePath::parse("UDUD")) == 0);
  CHECK(weight_w1(2, LatticePath::parse("UUDD")) == 1);
  CHECK(weight_w2(3, kFigure1) == 7);
  CHECK(weight_w2(2, LatticePath::parse("UDUDUD")) == 0);
  CHECK(weight_w2(2, LatticePath::parse("UUUDDD")) == 2);
  CHECK_THROWS_AS(weight_w1(3, LatticePath::parse("UUD")), DomainError);
}

TEST_CASE("Motzkin step weights") {
  WeightSpec w;
  for (int h = 0; h <= 4; ++h) {
    w.level[h] = Rational(h + 2);      // b_h
    w.down[h] = Rational(10 * h + 1);  // lambda_h
  }
  const Rational b1 = 3, b2 = 4, l2 = 21, l3 = 31;
  // Figure 2 drawn as UULDLLUUDDU
  CHECK(weight_motzkin(LatticePath::parse("UULDLLUUDDU"), w) == b1 * b1 * b2 * l2 * l2 * l3);
  CHECK(weight_motzkin(LatticePath::parse("UUUU"), w) == 1);

  WeightSpec one;
  one.down[1] = 5;
  CHECK(weight_motzkin(LatticePath::parse("UD"), one) == 5);
  CHECK_THROWS_WITH_AS(weight_motzkin(LatticePath::parse("UUDD"), one), doctest::Contains("height 2"), DomainError);
  CHECK_THROWS_AS(weight_motzkin(LatticePath::parse("L"), one), DomainError);
}

TEST_CASE("peaked weights") {
  WeightSpec w;
  w.peak.emplace();
  const Rational nu[] = {0, 2, 3, 5, 7};
  const Rational la[] = {0, 11, 13, 17, 19};
  for (int h = 1; h <= 4; ++h) {
    (*w.peak)[h] = nu[h];
    w.down[h] = la[h];
  }
  CHECK(weight_peaked(kFigure1, w) == nu[1] * nu[2] * nu[3] * nu[4] * nu[4] * la[1] * la[2] * la[3]);
  CHECK(weight_peaked(LatticePath::parse("UD"), w) == nu[1]);
  CHECK(weight_peaked(LatticePath::parse("UUDD"), w) == nu[2] * la[1]);
  CHECK_THROWS_AS(weight_motzkin(LatticePath::parse("UD"), w), DomainError);
}

TEST_CASE("enumeration") {
  auto words = [](const std::vector<LatticePath>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
  };
  CHECK(words(enumerate_paths({4, PathKind::Dyck, std::nullopt, 0, 0})) == std::vector<std::string>{"UUDD", "UDUD"});
  CHECK(enumerate_paths({3, PathKind::Motzkin, std::nullopt, 0, 0}).size() == 4);
  CHECK(words(enumerate_paths({4, PathKind::Dyck, 1, 0, 0})) == std::vector<std::string>{"UDUD"});
  CHECK(enumerate_paths({3, PathKind::Dyck, std::nullopt, 0, 0}).empty());
  CHECK(enumerate_paths({0, PathKind::Dyck, std::nullopt, 0, 0}).size() == 1);
  CHECK(enumerate_paths({2, PathKind::Motzkin, std::nullopt, 1, 2}).size() == 2);  // UL, LU
  CHECK_THROWS_AS(enumerate_paths({26, PathKind::Dyck, std::nullopt, 0, 0}), BoundExceeded);
  CHECK_THROWS_WITH(PathStream({30, PathKind::Dyck, std::nullopt, 0, 0}, 24), doctest::Contains("24"));

  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(BigInt(enumerate_paths({2 * n, PathKind::Dyck, std::nullopt, 0, 0}).size()) == catalan(n));
  for (std::size_t n = 0; n <= 14; ++n)
    CHECK(BigInt(enumerate_paths({n, PathKind::Motzkin, std::nullopt, 0, 0}).size()) == motzkin_number(n));
}

TEST_CASE("enumerated paths respect the strip and are distinct and sorted") {
  const auto paths = enumerate_paths({10, PathKind::Motzkin, 2, 1, 2});
  std::vector<std::string> seen;
  for (const auto& p : paths) {
    CHECK(p.start_height() == 1);
    CHECK(p.end_height() == 2);
    CHECK(p.max_height() <= 2);
    seen.push_back(p.to_string());
  }
  // Up < Level < Down
  std::string order = "ULD";
  auto less = [&](const std::string& a, const std::string& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return order.find(x) < order.find(y); });
  };
  CHECK(std::is_sorted(seen.begin(), seen.end(), less));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

  WeightSpec unit = WeightSpec::uniform(0, 1, 12);
  for (const auto& p : enumerate_paths({12, PathKind::Dyck, std::nullopt, 0, 0})) CHECK(weight_motzkin(p, unit) == 1);
}
