#include "patterngf/polynomial.hpp"

#include <algorithm>

#include "patterngf/errors.hpp"

namespace patterngf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::reciprocal() const { return is_zero() ? *this : reciprocal(c_.size() - 1); }

Polynomial Polynomial::reciprocal(std::size_t n) const {
  if (degree() > static_cast<long>(n)) throw DomainError("reciprocal order below the degree");
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial{*it};
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result{Rational(1)};
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + patterngf::to_string(c_[i]);
  return out + "]";
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial{}, a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Rational q = rem[i] / b.leading();
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Polynomial> factors;
  const Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = divmod(p, a).quotient;
  Polynomial c = divmod(dp, a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    Polynomial f = gcd(b, d);
    factors.push_back(f);
    b = divmod(b, f).quotient;
    c = divmod(d, f).quotient;
    d = c - b.derivative();
  }
  for (auto& f : factors) f = f * (Rational(1) / f.leading());
  while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
  return factors;
}

}  // namespace patterngf
