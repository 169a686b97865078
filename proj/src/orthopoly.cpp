#include "patterngf/orthopoly.hpp"

#include "patterngf/errors.hpp"

namespace patterngf {

PolySystem::PolySystem(Weight b, Weight lambda)
    : b_(std::move(b)), lambda_(std::move(lambda)), cache_(std::make_shared<Cache>()) {}

PolySystem PolySystem::constant(const Rational& b, const Rational& lambda) {
  return PolySystem([b](std::size_t) { return b; }, [lambda](std::size_t) { return lambda; });
}

Polynomial PolySystem::p(std::size_t n) const {
  std::lock_guard lock(cache_->mutex);
  auto& p = cache_->p;
  if (p.empty()) {
    p.push_back(Polynomial{Rational(1)});
    p.push_back(Polynomial{-b_(0), Rational(1)});
  }
  const Polynomial x = Polynomial::monomial(1, 1);
  while (p.size() <= n) {
    const std::size_t m = p.size() - 1;
    p.push_back((x - Polynomial{b_(m)}) * p[m] - lambda_(m) * p[m - 1]);
  }
  return p[n];
}

Polynomial PolySystem::p_star(std::size_t n) const {
  std::lock_guard lock(cache_->mutex);
  auto& q = cache_->p_star;
  if (q.empty()) {
    q.push_back(Polynomial{Rational(1)});
    q.push_back(Polynomial{Rational(1), -b_(0)});
  }
  const Polynomial x2 = Polynomial::monomial(1, 2);
  while (q.size() <= n) {
    const std::size_t m = q.size() - 1;
    q.push_back(Polynomial{Rational(1), -b_(m)} * q[m] - lambda_(m) * (x2 * q[m - 1]));
  }
  return q[n];
}

PolySystem PolySystem::shifted(std::size_t m) const {
  return PolySystem([b = b_, m](std::size_t i) { return b(i + m); },
                    [lambda = lambda_, m](std::size_t i) { return lambda(i + m); });
}

RationalFunction strip_gf_fraction(const PolySystem& sys, int K, int r, int s) {
  if (K < 0 || r < 0 || s < 0 || r > K || s > K)
    throw DomainError("strip endpoints must satisfy 0 <= r, s <= K (got K=" + std::to_string(K) +
                      ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  const auto lo = static_cast<std::size_t>(std::min(r, s));
  const auto hi = static_cast<std::size_t>(std::max(r, s));
  Rational prefactor = 1;
  if (r > s)
    for (std::size_t i = lo + 1; i <= hi; ++i) prefactor *= sys.lambda(i);
  Polynomial numerator = Polynomial::monomial(prefactor, hi - lo) * sys.p_star(lo) *
                         sys.shifted(hi + 1).p_star(static_cast<std::size_t>(K) - hi);
  return {std::move(numerator), sys.p_star(static_cast<std::size_t>(K) + 1)};
}

TruncatedSeries strip_gf(const PolySystem& sys, int K, int r, int s, std::size_t order) {
  auto f = strip_gf_fraction(sys, K, r, s);
  return expand_rational(f.numerator, f.denominator, order);
}

Polynomial chebyshev_u(std::size_t n) {
  Polynomial prev{Rational(1)};
  if (n == 0) return prev;
  const Polynomial two_z = Polynomial::monomial(2, 1);
  Polynomial cur = two_z;
  for (std::size_t i = 1; i < n; ++i) {
    Polynomial next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial q_polynomial(std::size_t n) {
  Polynomial prev{Rational(1)};
  Polynomial cur{Rational(1)};
  const Polynomial x = Polynomial::monomial(1, 1);
  for (std::size_t i = 1; i < n; ++i) {
    Polynomial next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HalfPowerSeries chebyshev_u_at_half_inverse(std::size_t n, int precision) {
  // U_n(z) = sum_j u_j z^j with z = 1/(2t): the t^{-j} coefficient is u_j / 2^j.
  const Polynomial u = chebyshev_u(n);
  std::vector<Rational> laurent(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Rational scale(1);
    mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), j);
    laurent[n - j] = u[j] * scale;
  }
  return HalfPowerSeries::from_laurent(Polynomial(std::move(laurent)), -static_cast<int>(n), precision);
}

}  // namespace patterngf
