#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/series.hpp"

using namespace patterngf;

namespace {

TruncatedSeries seq(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return TruncatedSeries(v);
}

}  // namespace

TEST_CASE("y polynomials") {
  const YPoly a = YPoly::monomial(1, 3) + YPoly::monomial(1, 2) + YPoly::monomial(2, 1) + YPoly(1);
  CHECK(a.to_string() == "y^3 + y^2 + 2*y + 1");
  CHECK(a.sum_of_coefficients() == 5);
  CHECK(a.evaluate(2) == 17);
  CHECK(a.degree() == 3);
  CHECK((a - a).is_zero());
  CHECK((YPoly::monomial(1, 1) * YPoly::monomial(3, 4)).coefficient(5) == 3);
  CHECK(YPoly(-1).to_string() == "-1");
  CHECK(YPoly().to_string() == "0");
  CHECK((YPoly::monomial(-1, 2) + YPoly(3)).to_string() == "-y^2 + 3");
}

TEST_CASE("rational expansion") {
  const auto one = expand_rational(Polynomial{1}, Polynomial{1, -1}, 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(one[n] == 1);
  CHECK(expand_rational(Polynomial{1, -1}, Polynomial{1, -2}, 5) == seq({1, 1, 2, 4, 8, 16}));

  const Polynomial den = Polynomial{1, -2}.pow(2);
  const auto s = expand_rational(Polynomial::monomial(1, 3), den, 20);
  for (std::size_t n = 3; n <= 20; ++n) {
    BigInt want = BigInt(static_cast<long>(n) - 2);
    want <<= static_cast<mp_bitcnt_t>(n - 3);
    CHECK(s[n] == Rational(want));
  }
  CHECK_THROWS_AS(expand_rational(Polynomial{1}, Polynomial{0, 1}, 4), DomainError);
  CHECK(to_string(seq({1, 1, 2})) == "1 + x + 2 x^2");
  CHECK(to_coefficient_list(seq({1, 1, 2})) == "1, 1, 2");
  CHECK(to_string(seq({0, -1, 0, 3})) == "-x + 3 x^3");
}

TEST_CASE("series arithmetic") {
  const auto geo = expand_rational(Polynomial{1}, Polynomial{1, -1}, 8);
  const auto sq = geo * geo;
  for (std::size_t n = 0; n <= 8; ++n) CHECK(sq[n] == static_cast<long>(n) + 1);
  CHECK(geo.pow(2) == sq);
  CHECK(geo.pow(0) == TruncatedSeries::constant(1, 8));
  CHECK((geo * geo.reciprocal()) == TruncatedSeries::constant(1, 8));
  CHECK((sq / geo) == geo);
  CHECK(geo.shifted(2)[2] == 1);
  CHECK(geo.shifted(2)[1] == 0);
  CHECK(geo.shifted(2).order() == 8);
  CHECK((geo + geo.truncated(3)).order() == 3);
  CHECK_THROWS_AS(geo.shifted(1).reciprocal(), DomainError);
  CHECK(from_polynomial(Polynomial{1, 2, 3}, 1) == seq({1, 2}));
  const TruncatedSeries half = Rational(1, 2) * geo;
  CHECK(half[5] == Rational(1, 2));
}

TEST_CASE("bivariate series") {
  // 1 / (1 - x - xy)
  BivariateSeries den(6);
  den[0] = 1;
  den[1] = YPoly(-1) - YPoly::monomial(1, 1);
  const auto f = den.reciprocal();
  CHECK(f[2].to_string() == "y^2 + 2*y + 1");
  CHECK(y_stratum(f, 1) == seq({0, 1, 2, 3, 4, 5, 6}));
  CHECK(evaluate_y(f, 1) == seq({1, 2, 4, 8, 16, 32, 64}));
  CHECK(evaluate_y(f, 0) == seq({1, 1, 1, 1, 1, 1, 1}));
  CHECK(to_coefficient_list(f.truncated(1)) == "1, y + 1");

  BivariateSeries bad(3);
  bad[0] = YPoly(2);
  CHECK_THROWS_AS(bad.reciprocal(), DomainError);
}
