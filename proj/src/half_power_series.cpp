#include "patterngf/half_power_series.hpp"

#include <algorithm>
#include <optional>

#include "patterngf/errors.hpp"

namespace patterngf {

HalfPowerSeries::HalfPowerSeries(int precision) : valuation_(precision) {}

HalfPowerSeries HalfPowerSeries::from_laurent(const Polynomial& p, int shift, int precision) {
  HalfPowerSeries s(precision);
  if (precision <= shift) return s;
  s.valuation_ = shift;
  s.c_.assign(static_cast<std::size_t>(precision - shift), Rational(0));
  for (std::size_t j = 0; j < p.coefficients().size() && j < s.c_.size(); ++j) s.c_[j] = p[j];
  s.normalize();
  return s;
}

HalfPowerSeries HalfPowerSeries::monomial(const Rational& c, int exponent, int precision) {
  return from_laurent(Polynomial{c}, exponent, precision);
}

void HalfPowerSeries::normalize() {
  auto first = std::find_if(c_.begin(), c_.end(), [](const Rational& q) { return q != 0; });
  valuation_ += static_cast<int>(first - c_.begin());
  c_.erase(c_.begin(), first);
}

Rational HalfPowerSeries::coefficient(int e) const {
  if (e >= precision()) throw HalfPowerResidue("coefficient beyond the known precision");
  if (e < valuation_) return 0;
  return c_[static_cast<std::size_t>(e - valuation_)];
}

HalfPowerSeries& HalfPowerSeries::operator+=(const HalfPowerSeries& o) {
  const int lo = std::min(valuation_, o.valuation_);
  const int hi = std::min(precision(), o.precision());
  std::vector<Rational> sum(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int e = lo; e < hi; ++e) {
    Rational v = 0;
    if (e >= valuation_) v += c_[static_cast<std::size_t>(e - valuation_)];
    if (e >= o.valuation_) v += o.c_[static_cast<std::size_t>(e - o.valuation_)];
    sum[static_cast<std::size_t>(e - lo)] = v;
  }
  valuation_ = lo;
  c_ = std::move(sum);
  if (c_.empty()) valuation_ = hi;
  normalize();
  return *this;
}

HalfPowerSeries& HalfPowerSeries::operator-=(const HalfPowerSeries& o) { return *this += Rational(-1) * o; }

HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b) {
  HalfPowerSeries r;
  const std::size_t len = std::min(a.c_.size(), b.c_.size());
  r.valuation_ = a.valuation_ + b.valuation_;
  if (len == 0) {
    r.valuation_ = std::min(a.valuation_ + b.precision(), b.valuation_ + a.precision());
    return r;
  }
  r.c_.assign(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

HalfPowerSeries operator*(const Rational& s, HalfPowerSeries a) {
  if (s == 0) return HalfPowerSeries(a.precision());
  for (auto& c : a.c_) c *= s;
  return a;
}

HalfPowerSeries HalfPowerSeries::inverse() const {
  if (c_.empty()) throw DomainError("inverse of a half-power series with no known nonzero term");
  HalfPowerSeries r;
  r.valuation_ = -valuation_;
  r.c_.assign(c_.size(), Rational(0));
  const Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j)
      if (c_[j] != 0) acc += c_[j] * r.c_[n - j];
    r.c_[n] = -inv0 * acc;
  }
  return r;
}

HalfPowerSeries HalfPowerSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return monomial(1, 0, static_cast<int>(c_.size()));
  std::optional<HalfPowerSeries> result;
  HalfPowerSeries base = *this;
  while (e) {
    if (e & 1) result = result ? *result * base : base;
    e >>= 1;
    if (e) base = base * base;
  }
  return *result;
}

TruncatedSeries HalfPowerSeries::to_x_series(std::size_t order) const {
  const int needed = 2 * static_cast<int>(order) + 1;
  if (precision() < needed) throw HalfPowerResidue("half-power value not known through the requested order");
  TruncatedSeries out(order);
  for (int e = valuation_; e < needed; ++e) {
    const Rational& c = c_[static_cast<std::size_t>(e - valuation_)];
    if (c == 0) continue;
    if (e < 0) throw HalfPowerResidue("negative power t^" + std::to_string(e) + " survives");
    if (e % 2 != 0) throw HalfPowerResidue("odd power t^" + std::to_string(e) + " survives");
    out[static_cast<std::size_t>(e / 2)] = c;
  }
  return out;
}

}  // namespace patterngf
