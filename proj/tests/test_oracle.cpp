#include <cstdlib>

#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/oracle.hpp"

using namespace patterngf;

namespace {

std::map<long, long> small(const Census& c) {
  std::map<long, long> out;
  for (const auto& [k, v] : c.histogram) out[k.get_si()] = v.get_si();
  return out;
}

}  // namespace

TEST_CASE("census examples") {
  CHECK(small(census(3, {Pattern::parse("132")}, Pattern::parse("12"))) == std::map<long, long>{{0, 1}, {1, 2}, {2, 1}, {3, 1}});
  CHECK(small(census(3, {Pattern::parse("123")}, Pattern::parse("213"))) == std::map<long, long>{{0, 4}, {1, 1}});
  CHECK(small(census(0, {Pattern::parse("132")}, Pattern::parse("12"))) == std::map<long, long>{{0, 1}});
  const auto two = census(5, {Pattern::parse("132"), Pattern::parse("123")}, Pattern::parse("1"));
  CHECK(two.total() == 16);
  CHECK(two.at(BigInt(5)) == 16);
  CHECK(two.at(BigInt(4)) == 0);
}

TEST_CASE("census totals are Catalan numbers") {
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(census(n, {Pattern::parse("132")}, Pattern::parse("12")).total() == catalan(n));
    CHECK(census(n, {Pattern::parse("123")}, Pattern::parse("21")).total() == catalan(n));
  }
}

TEST_CASE("census does not depend on the worker count") {
  OracleConfig one, three;
  one.threads = 1;
  three.threads = 3;
  const auto a = census(8, {Pattern::parse("123")}, Pattern::parse("213"), one);
  const auto b = census(8, {Pattern::parse("123")}, Pattern::parse("213"), three);
  CHECK(a.histogram == b.histogram);
  CHECK(census_csv(a) == census_csv(b));
}

TEST_CASE("bounds") {
  OracleConfig cfg;
  cfg.max_n = 5;
  CHECK_THROWS_AS(census(6, {Pattern::parse("132")}, Pattern::parse("12"), cfg), BoundExceeded);
  try {
    census(6, {Pattern::parse("132")}, Pattern::parse("12"), cfg);
  } catch (const BoundExceeded& e) {
    CHECK(e.bound() == 5);
  }
  setenv("PATTERNGF_MAX_N", "7", 1);
  CHECK(OracleConfig::from_environment().max_n == 7);
  unsetenv("PATTERNGF_MAX_N");
  CHECK(OracleConfig::from_environment().max_n == 11);
  CHECK_THROWS_AS(path_census({26, PathKind::Dyck, std::nullopt, 0, 0}, WeightSpec::uniform(0, 1, 13)), BoundExceeded);
}

TEST_CASE("path census examples") {
  CHECK(path_census({4, PathKind::Dyck, std::nullopt, 0, 0}, WeightSpec::uniform(0, 1, 4)) == 2);
  CHECK(path_census({4, PathKind::Dyck, std::nullopt, 0, 0}, WeightSpec::uniform_peaked(1, 1, 4)) == 2);
  CHECK(path_census({5, PathKind::Motzkin, std::nullopt, 0, 0}, WeightSpec::uniform(1, 1, 6)) == 21);
  CHECK(path_census({6, PathKind::Motzkin, std::nullopt, 0, 0}, WeightSpec::uniform(1, 1, 6)) == 51);
  CHECK(path_census({3, PathKind::Dyck, std::nullopt, 0, 0}, WeightSpec::uniform(0, 1, 4)) == 0);
}

TEST_CASE("csv") {
  CHECK(census_csv(census(3, {Pattern::parse("123")}, Pattern::parse("213"))) == "occurrences,count\n0,4\n1,1\n");
}
