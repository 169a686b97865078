#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "patterngf/numeric.hpp"

namespace patterngf {

/// Dense univariate polynomial over the rationals, lowest degree first, with
/// no trailing zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;

  /// x^n p(1/x) for n = degree().
  Polynomial reciprocal() const;
  /// x^n p(1/x) for an explicit n >= degree().
  Polynomial reciprocal(std::size_t n) const;
  /// p(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial&) const = default;

  /// "[c0, c1, ...]" lowest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's decomposition: result[i] is the monic product of the irreducible
/// factors of multiplicity i + 1. The leading coefficient is dropped.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace patterngf
