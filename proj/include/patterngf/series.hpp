#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "patterngf/errors.hpp"
#include "patterngf/numeric.hpp"
#include "patterngf/polynomial.hpp"

namespace patterngf {

/// Sparse polynomial in y with big-integer coefficients. Used as the
/// coefficient ring of bivariate series, where y-degrees jump by binomial
/// coefficients.
class YPoly {
 public:
  YPoly() = default;
  YPoly(long c);  // NOLINT: constants convert implicitly
  YPoly(BigInt c);  // NOLINT
  static YPoly monomial(const BigInt& c, std::uint64_t exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint64_t, BigInt>& terms() const { return terms_; }
  BigInt coefficient(std::uint64_t e) const;
  /// 0 for the zero polynomial.
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Rational evaluate(const Rational& y) const;
  BigInt sum_of_coefficients() const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const YPoly& o);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(YPoly a, const YPoly& b) { return a *= b; }

  bool operator==(const YPoly&) const = default;

  /// Highest power first, e.g. "y^3 + y^2 + 2*y + 1".
  std::string to_string() const;

 private:
  void add_term(std::uint64_t e, const BigInt& c);
  std::map<std::uint64_t, BigInt> terms_;
};

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw DomainError("reciprocal of a series with zero constant term");
    return 1 / c;
  }
};

template <>
struct CoeffTraits<YPoly> {
  static bool is_zero(const YPoly& c) { return c.is_zero(); }
  /// Only the units +1 and -1 of Z[y] are invertible.
  static YPoly inverse(const YPoly& c) {
    if (c == YPoly(1)) return YPoly(1);
    if (c == YPoly(-1)) return YPoly(-1);
    throw DomainError("reciprocal of a bivariate series whose constant term is not a unit");
  }
};

/// Power series in x known exactly modulo x^{order+1}. Binary operations
/// truncate to the smaller order.
template <class C>
class Series {
 public:
  explicit Series(std::size_t order = 0) : c_(order + 1) {}
  Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {  // NOLINT
    if (c_.empty()) c_.resize(1);
  }

  static Series constant(const C& c, std::size_t order) {
    Series s(order);
    s.c_[0] = c;
    return s;
  }
  /// c * x^exponent (zero if exponent > order).
  static Series monomial(const C& c, std::size_t exponent, std::size_t order) {
    Series s(order);
    if (exponent <= order) s.c_[exponent] = c;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t n) const { return c_[n]; }
  C& operator[](std::size_t n) { return c_[n]; }
  const std::vector<C>& coefficients() const { return c_; }

  Series truncated(std::size_t order) const {
    Series s(order);
    for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s.c_[i] = c_[i];
    return s;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Series& operator+=(const Series& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    const std::size_t n = r.order();
    for (std::size_t i = 0; i <= n; ++i) {
      if (CoeffTraits<C>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j)
        if (!CoeffTraits<C>::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator*(const C& s, Series a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }

  /// Throws DomainError when the constant term is not invertible.
  Series reciprocal() const {
    const C inv0 = CoeffTraits<C>::inverse(c_[0]);
    Series r(order());
    r.c_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
      C acc{};
      for (std::size_t j = 1; j <= n; ++j)
        if (!CoeffTraits<C>::is_zero(c_[j])) acc += c_[j] * r.c_[n - j];
      r.c_[n] = -(inv0 * acc);
    }
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

  Series pow(unsigned e) const {
    Series result = constant(C(1), order());
    Series base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Multiply by x^m, keeping the order.
  Series shifted(std::size_t m) const {
    Series r(order());
    for (std::size_t i = 0; i + m <= order(); ++i) r.c_[i + m] = c_[i];
    return r;
  }

  bool operator==(const Series&) const = default;

 private:
  std::vector<C> c_;
};

using TruncatedSeries = Series<Rational>;
using BivariateSeries = Series<YPoly>;

TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

/// Power series of numerator/denominator to the given order, by the linear
/// recurrence d_0 c_n = a_n - sum_{j>=1} d_j c_{n-j}. Throws DomainError when
/// the denominator has zero constant term.
TruncatedSeries expand_rational(const Polynomial& numerator, const Polynomial& denominator, std::size_t order);

/// Substitute y := value.
TruncatedSeries evaluate_y(const BivariateSeries& s, const Rational& value);
/// Coefficient series of y^r.
TruncatedSeries y_stratum(const BivariateSeries& s, std::uint64_t r);

/// "c0 + c1*x + c2*x^2 + ..." with zero terms omitted ("0" if all vanish).
std::string to_string(const TruncatedSeries& s);
std::string to_string(const BivariateSeries& s);
/// "c0, c1, ..., cN".
std::string to_coefficient_list(const TruncatedSeries& s);
std::string to_coefficient_list(const BivariateSeries& s);

}  // namespace patterngf
