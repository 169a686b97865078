#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/half_power_series.hpp"
#include "patterngf/orthopoly.hpp"

using namespace patterngf;

TEST_CASE("Laurent arithmetic in t") {
  const auto one_plus_t = HalfPowerSeries::from_laurent(Polynomial{1, 1}, 0, 20);
  const auto inv = one_plus_t.inverse();
  for (int e = 0; e < 20; ++e) CHECK(inv.coefficient(e) == (e % 2 ? -1 : 1));
  const auto prod = one_plus_t * inv;
  CHECK(prod.coefficient(0) == 1);
  for (int e = 1; e < prod.precision(); ++e) CHECK(prod.coefficient(e) == 0);

  const auto shifted = HalfPowerSeries::from_laurent(Polynomial{2, 0, 1}, -3, 10);  // 2 t^-3 + t^-1
  CHECK(shifted.valuation() == -3);
  CHECK(shifted.coefficient(-1) == 1);
  const auto back = shifted.inverse();
  CHECK(back.valuation() == 3);
  CHECK(back.coefficient(3) == Rational(1, 2));
  CHECK(back.coefficient(5) == Rational(-1, 4));

  CHECK(one_plus_t.pow(3).coefficient(2) == 3);
  CHECK(one_plus_t.pow(0).coefficient(0) == 1);
  CHECK(one_plus_t.pow(-2).coefficient(1) == -2);
  CHECK((Rational(3) * one_plus_t).coefficient(1) == 3);
}

TEST_CASE("reading back as a series in x") {
  const auto even = HalfPowerSeries::from_laurent(Polynomial{1, 0, -1}, 0, 12);
  const auto s = (even * even).to_x_series(5);
  CHECK(s[0] == 1);
  CHECK(s[1] == -2);
  CHECK(s[2] == 1);
  CHECK_THROWS_AS(HalfPowerSeries::monomial(1, 1, 10).to_x_series(3), HalfPowerResidue);
  CHECK_THROWS_AS(HalfPowerSeries::monomial(1, -2, 10).to_x_series(3), HalfPowerResidue);
  CHECK_THROWS_AS(HalfPowerSeries::monomial(1, 0, 4).to_x_series(3), HalfPowerResidue);
}

TEST_CASE("Chebyshev polynomials at 1/(2t) against q_n") {
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto u = chebyshev_u_at_half_inverse(n, 40);
    const auto scaled = u * HalfPowerSeries::monomial(1, static_cast<int>(n), 40);
    const auto q = q_polynomial(n);
    const auto x = scaled.to_x_series(10);
    for (std::size_t j = 0; j <= 10; ++j) CHECK(x[j] == q[j]);
  }
}

TEST_CASE("ratios of Chebyshev values evaluate in x") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto ratio = evaluate_in_x(
        [k](int p) {
          return chebyshev_u_at_half_inverse(k - 1, p) / chebyshev_u_at_half_inverse(k, p) *
                 HalfPowerSeries::monomial(1, -1, p);
        },
        12);
    CHECK(ratio == expand_rational(q_polynomial(k - 1), q_polynomial(k), 12));
  }
}
