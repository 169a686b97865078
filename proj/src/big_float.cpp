#include "patterngf/big_float.hpp"

#include <algorithm>
#include <vector>

#include "patterngf/polynomial.hpp"

namespace patterngf {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

BigInt BigFloat::round() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigFloat evaluate(const Polynomial& p, const BigFloat& x) {
  BigFloat acc(x.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigFloat(*it, x.precision());
  return acc;
}

}  // namespace patterngf
