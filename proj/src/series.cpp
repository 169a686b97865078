#include "patterngf/series.hpp"

namespace patterngf {

YPoly::YPoly(long c) {
  if (c != 0) terms_[0] = c;
}

YPoly::YPoly(BigInt c) {
  if (c != 0) terms_[0] = std::move(c);
}

YPoly YPoly::monomial(const BigInt& c, std::uint64_t exponent) {
  YPoly p;
  p.add_term(exponent, c);
  return p;
}

void YPoly::add_term(std::uint64_t e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt YPoly::coefficient(std::uint64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Rational YPoly::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational power;
    mpz_pow_ui(power.get_num_mpz_t(), y.get_num_mpz_t(), e);
    mpz_pow_ui(power.get_den_mpz_t(), y.get_den_mpz_t(), e);
    acc += power * Rational(c);
  }
  return acc;
}

BigInt YPoly::sum_of_coefficients() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

YPoly& YPoly::operator*=(const YPoly& o) {
  YPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  return *this = std::move(r);
}

std::string YPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && e > 0;
    if (!unit) out += mag.get_str();
    if (e > 0) out += (unit ? "" : "*") + std::string("y") + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return out;
}

TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = p[i];
  return s;
}

TruncatedSeries expand_rational(const Polynomial& numerator, const Polynomial& denominator, std::size_t order) {
  if (denominator[0] == 0) throw DomainError("denominator has zero constant term");
  const Rational d0 = denominator[0];
  const auto deg = static_cast<std::size_t>(std::max(0L, denominator.degree()));
  TruncatedSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = numerator[n];
    for (std::size_t j = 1; j <= std::min(n, deg); ++j) acc -= denominator[j] * s[n - j];
    s[n] = acc / d0;
  }
  return s;
}

TruncatedSeries evaluate_y(const BivariateSeries& s, const Rational& value) {
  TruncatedSeries r(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) r[n] = s[n].evaluate(value);
  return r;
}

TruncatedSeries y_stratum(const BivariateSeries& s, std::uint64_t r) {
  TruncatedSeries out(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) out[n] = Rational(s[n].coefficient(r));
  return out;
}

namespace {

std::string x_power(std::size_t n) {
  if (n == 0) return "";
  return n == 1 ? "x" : "x^" + std::to_string(n);
}

}  // namespace

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (n == 0 || mag != 1) out += patterngf::to_string(mag) + (n ? " " : "");
    out += x_power(n);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const BivariateSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool single = s[n].terms().size() == 1;
    std::string c = s[n].to_string();
    if (n == 0) out += c;
    else if (c == "1") out += x_power(n);
    else out += (single ? c : "(" + c + ")") + " " + x_power(n);
  }
  return out.empty() ? "0" : out;
}

std::string to_coefficient_list(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) out += (n ? ", " : "") + patterngf::to_string(s[n]);
  return out;
}

std::string to_coefficient_list(const BivariateSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) out += (n ? ", " : "") + s[n].to_string();
  return out;
}

}  // namespace patterngf
