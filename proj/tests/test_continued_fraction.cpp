#include "doctest.h"
#include "patterngf/continued_fraction.hpp"
#include "patterngf/errors.hpp"
#include "patterngf/oracle.hpp"

using namespace patterngf;

namespace {

YPoly histogram_poly(const Census& c) {
  YPoly out;
  for (const auto& [r, v] : c.histogram) out += YPoly::monomial(v, r.get_ui());
  return out;
}

TruncatedSeries catalan_series(std::size_t order) {
  std::vector<Rational> v;
  for (std::size_t n = 0; n <= order; ++n) v.emplace_back(catalan(n));
  return TruncatedSeries(v);
}

}  // namespace

TEST_CASE("132-avoiders by occurrences of 12...k") {
  const auto k2 = gf_theorem1(2, 7);
  CHECK(k2[0] == YPoly(1));
  CHECK(k2[3].to_string() == "y^3 + y^2 + 2*y + 1");
  for (int k = 2; k <= 5; ++k) {
    const auto f = gf_theorem1(k, 7);
    CHECK(evaluate_y(f, 1) == catalan_series(7));
    for (std::size_t n = 0; n <= 7; ++n)
      CHECK(f[n] == histogram_poly(census(n, {Pattern::parse("132")}, Pattern::increasing(k))));
  }
}

TEST_CASE("123-avoiders by occurrences of (k-1)...1k") {
  const auto k3 = gf_theorem8(3, 7);
  CHECK(k3[0] == YPoly(1));
  CHECK(k3[3].to_string() == "y + 4");
  for (int k = 2; k <= 5; ++k) {
    const auto f = gf_theorem8(k, 7);
    CHECK(evaluate_y(f, 1) == catalan_series(7));
    for (std::size_t n = 0; n <= 7; ++n)
      CHECK(f[n] == histogram_poly(census(n, {Pattern::parse("123")}, Pattern::decreasing_then_max(k))));
  }
  CHECK_THROWS_AS(gf_theorem8(1, 4), DomainError);
  CHECK_THROWS_AS(gf_theorem1(1, 4), DomainError);
}

TEST_CASE("peaked Dyck fractions") {
  const std::size_t order = 9;
  const LevelWeights<Rational> x = [&](std::size_t) { return TruncatedSeries::monomial(1, 1, order); };
  CHECK(cf_peaked_dyck(x, x, order) == catalan_series(order));

  const LevelWeights<Rational> only_first = [&](std::size_t h) {
    return h == 1 ? TruncatedSeries::monomial(1, 1, order) : TruncatedSeries(order);
  };
  const LevelWeights<Rational> zero = [&](std::size_t) { return TruncatedSeries(order); };
  CHECK(cf_peaked_dyck(only_first, zero, order) == expand_rational(Polynomial{1}, Polynomial{1, -1}, order));

  // nu = lambda collapses to the plain Dyck fraction.
  const LevelWeights<Rational> w = [&](std::size_t h) {
    return TruncatedSeries::monomial(Rational(static_cast<long>(h) + 1, 3), 1, order);
  };
  CHECK(cf_peaked_dyck(w, w, order) == cf_motzkin(zero, w, order));
}

TEST_CASE("Motzkin fractions and truncation depth") {
  const std::size_t order = 12;
  const LevelWeights<Rational> b = [&](std::size_t) { return TruncatedSeries::monomial(1, 1, order); };
  const LevelWeights<Rational> l = [&](std::size_t) { return TruncatedSeries::monomial(1, 2, order); };
  const auto m = cf_motzkin(b, l, order);
  const WeightSpec spec = WeightSpec::uniform(1, 1, 12);
  for (std::size_t n = 0; n <= order; ++n) CHECK(m[n] == path_census({n, PathKind::Motzkin, std::nullopt, 0, 0}, spec));
  CHECK(m[6] == 51);
  // Deeper truncations do not change the known coefficients.
  CHECK(cf_motzkin(order + 1, b, l, order) == cf_motzkin(order + 6, b, l, order));
  // depth D keeps heights below D
  const auto shallow = cf_motzkin(2, b, l, order);
  for (std::size_t n = 0; n <= order; ++n)
    CHECK(shallow[n] == path_census({n, PathKind::Motzkin, 1, 0, 0}, spec));
}
