#include "doctest.h"
#include "patterngf/continued_fraction.hpp"
#include "patterngf/export.hpp"

using namespace patterngf;
using nlohmann::json;

TEST_CASE("series json") {
  const auto s = expand_rational(Polynomial{1}, Polynomial{1, Rational(-1, 2)}, 2);
  CHECK(to_json(s) == json::array({"1", "1/2", "1/4"}));
  const auto b = gf_theorem1(2, 3);
  CHECK(to_json(b)[3] == json{{"0", "1"}, {"1", "2"}, {"2", "1"}, {"3", "1"}});
  CHECK(to_json(Polynomial{1, -3, 1}) == json::array({"1", "-3", "1"}));
}

TEST_CASE("census json and document wrapper") {
  const auto c = census(3, {Pattern::parse("123")}, Pattern::parse("213"));
  const json j = to_json(c);
  CHECK(j["n"] == 3);
  CHECK(j["count"] == "213");
  CHECK(j["total"] == "5");
  CHECK(j["histogram"][1]["occurrences"] == "1");

  const json doc = json::parse(json_document("census", j));
  CHECK(doc["schema"] == "patterngf/1");
  CHECK(doc["kind"] == "census");
  CHECK(json_document("x", j) == json_document("x", j));
}
