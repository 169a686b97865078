#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "patterngf/half_power_series.hpp"
#include "patterngf/polynomial.hpp"
#include "patterngf/series.hpp"

namespace patterngf {

/// Polynomials p_n defined by p_0 = 1, p_1 = x - b_0 and
///   x p_n = p_{n+1} + b_n p_n + lambda_n p_{n-1}   (n >= 1),
/// together with their reciprocals p*_n(x) = x^n p_n(1/x). Computed entries are
/// cached; the cache is shared by copies and guarded for concurrent readers.
class PolySystem {
 public:
  using Weight = std::function<Rational(std::size_t)>;

  PolySystem(Weight b, Weight lambda);
  static PolySystem constant(const Rational& b, const Rational& lambda);

  Rational b(std::size_t i) const { return b_(i); }
  Rational lambda(std::size_t i) const { return lambda_(i); }

  Polynomial p(std::size_t n) const;
  /// Direct recurrence p*_{n+1} = (1 - b_n x) p*_n - lambda_n x^2 p*_{n-1}.
  Polynomial p_star(std::size_t n) const;

  /// S^m: every b_i and lambda_i replaced by b_{i+m} and lambda_{i+m}.
  PolySystem shifted(std::size_t m) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<Polynomial> p;
    std::vector<Polynomial> p_star;
  };

  Weight b_;
  Weight lambda_;
  std::shared_ptr<Cache> cache_;
};

inline PolySystem poly_system(PolySystem::Weight b, PolySystem::Weight lambda) {
  return PolySystem(std::move(b), std::move(lambda));
}
inline Polynomial eval_pn(const PolySystem& sys, std::size_t n) { return sys.p(n); }
inline Polynomial eval_pstar(const PolySystem& sys, std::size_t n) { return sys.p_star(n); }
inline PolySystem shift(const PolySystem& sys, std::size_t m) { return sys.shifted(m); }

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;
};

/// Generating function sum_P w(P) x^{len(P)} of Motzkin paths from height r to
/// height s that stay within [0, K], as numerator/denominator:
///   r <= s:  x^{s-r} p*_r  S^{s+1}p*_{K-s} / p*_{K+1}
///   r >= s:  lambda_{s+1}...lambda_r x^{r-s} p*_s S^{r+1}p*_{K-r} / p*_{K+1}
/// Throws DomainError unless 0 <= r, s <= K.
RationalFunction strip_gf_fraction(const PolySystem& sys, int K, int r, int s);
TruncatedSeries strip_gf(const PolySystem& sys, int K, int r, int s, std::size_t order);

/// Chebyshev polynomial of the second kind U_n(z), U_{n+1} = 2z U_n - U_{n-1}.
Polynomial chebyshev_u(std::size_t n);

/// q_n(x) = x^{n/2} U_n(1/(2 sqrt x)): q_0 = q_1 = 1, q_{n+1} = q_n - x q_{n-1}.
Polynomial q_polynomial(std::size_t n);

/// U_n(1/(2t)) as a Laurent polynomial in t, from the coefficients of U_n.
HalfPowerSeries chebyshev_u_at_half_inverse(std::size_t n, int precision);

}  // namespace patterngf
