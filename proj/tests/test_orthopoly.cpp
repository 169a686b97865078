#include <thread>

#include "doctest.h"
#include "patterngf/errors.hpp"
#include "patterngf/oracle.hpp"
#include "patterngf/orthopoly.hpp"

using namespace patterngf;

TEST_CASE("Chebyshev specializations") {
  const PolySystem dyck = PolySystem::constant(0, 1);
  CHECK(dyck.p(3) == Polynomial{0, -2, 0, 1});
  CHECK(chebyshev_u(3) == Polynomial{0, -4, 0, 8});
  const PolySystem motzkin = PolySystem::constant(1, 1);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(dyck.p(n) == chebyshev_u(n).compose(Polynomial{0, Rational(1, 2)}));
    CHECK(motzkin.p(n) == chebyshev_u(n).compose(Polynomial{Rational(-1, 2), Rational(1, 2)}));
  }
}

TEST_CASE("q polynomials") {
  CHECK(q_polynomial(0) == Polynomial{1});
  CHECK(q_polynomial(1) == Polynomial{1});
  CHECK(q_polynomial(2) == Polynomial{1, -1});
  CHECK(q_polynomial(3) == Polynomial{1, -2});
  CHECK(q_polynomial(4) == Polynomial{1, -3, 1});
  const PolySystem dyck = PolySystem::constant(0, 1);
  for (std::size_t n = 0; n <= 12; ++n) {
    const Polynomial ps = dyck.p_star(n);
    for (std::size_t j = 0; j <= n; ++j) {
      CHECK(ps[2 * j] == q_polynomial(n)[j]);
      CHECK(ps[2 * j + 1] == 0);
    }
  }
}

TEST_CASE("reciprocal polynomials, shift and weights") {
  const PolySystem sys([](std::size_t i) { return Rational(static_cast<long>(i * i) - 2, 3); },
                       [](std::size_t i) { return Rational(static_cast<long>(i) + 1, 2); });
  for (std::size_t n = 0; n <= 12; ++n) CHECK(sys.p_star(n) == sys.p(n).reciprocal(n));
  CHECK(sys.p(1) == Polynomial{Rational(2, 3), 1});
  const PolySystem s2 = shift(sys, 2);
  CHECK(s2.b(0) == sys.b(2));
  CHECK(s2.lambda(1) == sys.lambda(3));
  CHECK(eval_pstar(s2, 3) == shift(shift(sys, 1), 1).p_star(3));
  CHECK(eval_pn(sys, 4) == sys.p(4));

  // Concurrent readers share one cache.
  std::vector<Polynomial> got(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < got.size(); ++t) pool.emplace_back([&, t] { got[t] = sys.p_star(15 + t); });
  }
  for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t] == sys.p(15 + t).reciprocal(15 + t));
}

TEST_CASE("strip generating function") {
  const PolySystem dyck = PolySystem::constant(0, 1);
  // Height-1 strip: only sawtooth paths, 1 / (1 - x^2).
  const auto saw = strip_gf(dyck, 1, 0, 0, 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(saw[n] == (n % 2 == 0 ? 1 : 0));

  const PolySystem unit = PolySystem::constant(1, 1);
  const WeightSpec spec = WeightSpec::uniform(1, 1, 6);
  for (int K = 0; K <= 3; ++K)
    for (int r = 0; r <= K; ++r)
      for (int s = 0; s <= K; ++s) {
        const auto f = strip_gf(unit, K, r, s, 9);
        for (std::size_t m = 0; m <= 9; ++m)
          CHECK(f[m] == path_census({m, PathKind::Motzkin, K, r, s}, spec));
      }

  const auto frac = strip_gf_fraction(dyck, 2, 2, 0);
  CHECK(frac.denominator == dyck.p_star(3));
  CHECK_THROWS_AS(strip_gf(dyck, 2, 3, 0, 4), DomainError);
  CHECK_THROWS_AS(strip_gf(dyck, 2, 0, -1, 4), DomainError);
}
