#pragma once

#include <string>

#include <mpfr.h>

#include "patterngf/numeric.hpp"
#include "patterngf/polynomial.hpp"

namespace patterngf {

/// Binary floating-point number with an explicit precision in bits (MPFR,
/// round-to-nearest). Binary operations produce the larger precision of their
/// operands; there is no ambient default.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const Rational& value, mpfr_prec_t precision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 25) const;
  /// Nearest integer.
  BigInt round() const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend BigFloat sin(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat abs(const BigFloat& a);
  friend BigFloat pow(const BigFloat& a, long e);

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

/// Evaluates a rational polynomial at a point.
BigFloat evaluate(const Polynomial& p, const BigFloat& x);

}  // namespace patterngf
