#pragma once

#include <stdexcept>
#include <vector>

#include "patterngf/polynomial.hpp"
#include "patterngf/series.hpp"

namespace patterngf {

/// Raised when a value in t = sqrt(x) cannot be read back as a series in x:
/// an odd power of t or a negative power survives, or too little precision
/// is left.
class HalfPowerResidue : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Laurent series in an auxiliary variable t with t^2 = x, known modulo
/// t^precision(). Products keep the smaller relative precision, so negative
/// valuations introduced by Chebyshev factors are tracked exactly.
class HalfPowerSeries {
 public:
  /// Zero, known modulo t^precision.
  explicit HalfPowerSeries(int precision = 0);

  /// sum_j p[j] t^{j + shift}, known modulo t^precision.
  static HalfPowerSeries from_laurent(const Polynomial& p, int shift, int precision);
  /// c * t^exponent.
  static HalfPowerSeries monomial(const Rational& c, int exponent, int precision);

  /// Lowest exponent carrying a stored coefficient.
  int valuation() const { return valuation_; }
  /// Exponent of the first unknown coefficient.
  int precision() const { return valuation_ + static_cast<int>(c_.size()); }
  /// Coefficient of t^e; e must be below precision().
  Rational coefficient(int e) const;

  HalfPowerSeries& operator+=(const HalfPowerSeries& o);
  HalfPowerSeries& operator-=(const HalfPowerSeries& o);
  friend HalfPowerSeries operator+(HalfPowerSeries a, const HalfPowerSeries& b) { return a += b; }
  friend HalfPowerSeries operator-(HalfPowerSeries a, const HalfPowerSeries& b) { return a -= b; }
  friend HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b);
  friend HalfPowerSeries operator*(const Rational& s, HalfPowerSeries a);
  HalfPowerSeries inverse() const;
  friend HalfPowerSeries operator/(const HalfPowerSeries& a, const HalfPowerSeries& b) { return a * b.inverse(); }
  /// Negative exponents go through inverse().
  HalfPowerSeries pow(int e) const;

  /// Reads the value as a series in x = t^2 up to x^order. Throws
  /// HalfPowerResidue if any odd or negative power of t has a nonzero
  /// coefficient, or if the value is not known through t^{2 order}.
  TruncatedSeries to_x_series(std::size_t order) const;

 private:
  void normalize();
  int valuation_ = 0;
  std::vector<Rational> c_;
};

/// Evaluates a half-power expression at increasing working precision until
/// its value is known through x^order, then converts to x.
template <class Build>
TruncatedSeries evaluate_in_x(Build&& build, std::size_t order) {
  const int needed = 2 * static_cast<int>(order) + 1;
  int working = needed + 2;
  for (int attempt = 0; attempt < 16; ++attempt) {
    HalfPowerSeries value = build(working);
    if (value.precision() >= needed) return value.to_x_series(order);
    working += needed - value.precision() + 2;
  }
  throw HalfPowerResidue("half-power evaluation did not reach the requested order");
}

}  // namespace patterngf
