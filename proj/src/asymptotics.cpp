#include "patterngf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "patterngf/closed_forms.hpp"
#include "patterngf/continued_fraction.hpp"
#include "patterngf/errors.hpp"

namespace patterngf {

namespace {

using Complex = std::complex<long double>;

// Durand-Kerner iteration on the monic normalization of a squarefree p.
std::vector<Complex> approximate_roots(const Polynomial& p) {
  const auto degree = static_cast<std::size_t>(p.degree());
  std::vector<long double> c(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) c[i] = Rational(p[i] / p.leading()).get_d();
  if (degree == 1) return {Complex(-c[0], 0)};

  long double bound = 0;
  for (std::size_t i = 0; i < degree; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1;
  std::vector<Complex> z(degree);
  const Complex seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < degree; ++i) z[i] = bound * std::pow(seed, static_cast<int>(i));

  auto eval = [&](Complex x) {
    Complex acc = 0;
    for (std::size_t i = degree + 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

struct LocatedRoot {
  Complex value;
  unsigned multiplicity;
  std::size_t factor;
};

BigFloat bisect(const Polynomial& p, BigFloat lo, BigFloat hi, mpfr_prec_t precision) {
  const int sign_lo = evaluate(p, lo).sign();
  BigFloat two(2, precision);
  for (mpfr_prec_t i = 0; i < precision + 8; ++i) {
    BigFloat mid = (lo + hi) / two;
    const int s = evaluate(p, mid).sign();
    if (s == 0) return mid;
    if (s == sign_lo) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / two;
}

}  // namespace

BigFloat AsymptoticEstimate::operator()(long n) const {
  const mpfr_prec_t prec = root.precision();
  BigFloat value = pow(root, -(n + static_cast<long>(multiplicity))) * constant;
  if (multiplicity % 2 == 1) value = -value;
  BigFloat falling(1, prec);
  for (unsigned i = 1; i < multiplicity; ++i) falling = falling * BigFloat(n, prec) / BigFloat(static_cast<long>(i), prec);
  return value * falling;
}

AsymptoticEstimate leading_term(const Polynomial& numerator, const Polynomial& denominator, mpfr_prec_t precision) {
  if (denominator.is_zero()) throw DomainError("denominator is zero");
  const Polynomial common = gcd(numerator, denominator);
  const Polynomial f = numerator.is_zero() ? numerator : divmod(numerator, common).quotient;
  const Polynomial den = numerator.is_zero() ? denominator : divmod(denominator, common).quotient;
  const auto factors = squarefree_decomposition(den);

  std::vector<LocatedRoot> roots;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (const Complex& z : approximate_roots(factors[i])) roots.push_back({z, static_cast<unsigned>(i + 1), i});
  }
  if (roots.empty()) throw DomainError("denominator has no zeros; the coefficients are eventually zero");
  std::sort(roots.begin(), roots.end(),
            [](const LocatedRoot& a, const LocatedRoot& b) { return std::abs(a.value) < std::abs(b.value); });

  const LocatedRoot& smallest = roots.front();
  const long double modulus = std::abs(smallest.value);
  constexpr long double tie = 1e-12L;
  if (modulus == 0) throw DomainError("denominator vanishes at 0");
  if (std::abs(smallest.value.imag()) > tie * modulus || smallest.value.real() <= 0)
    throw DomainError("smallest zero of the denominator is not a positive real number");
  if (roots.size() > 1 && std::abs(roots[1].value) <= modulus * (1 + 1e-9L))
    throw DomainError("smallest zero of the denominator is not unique in modulus");

  // Bracket the simple zero of its squarefree factor, excluding other zeros.
  const Polynomial& factor = factors[smallest.factor];
  const long double gap = roots.size() > 1 ? (std::abs(roots[1].value) - modulus) / 2 : modulus;
  long double width = std::min(modulus * 1e-12L, gap);
  const BigFloat center(Rational(static_cast<double>(smallest.value.real())), precision);
  // Long double carries more digits than the double used for `center`, so
  // widen until the bracket shows a sign change.
  for (int tries = 0;; ++tries) {
    if (tries > 40 || width > gap) throw DomainError("could not isolate the smallest zero of the denominator");
    const BigFloat w(Rational(static_cast<double>(width)), precision);
    BigFloat lo = center - w, hi = center + w;
    if (evaluate(factor, lo).sign() * evaluate(factor, hi).sign() < 0) {
      BigFloat a = bisect(factor, lo, hi, precision);
      // g(a) = den^{(R)}(a) / R!
      Polynomial derivative = den;
      BigInt factorial = 1;
      for (unsigned i = 1; i <= smallest.multiplicity; ++i) {
        derivative = derivative.derivative();
        factorial *= i;
      }
      BigFloat g = evaluate(derivative, a) / BigFloat(Rational(factorial), precision);
      BigFloat constant = evaluate(f, a) / g;
      return {std::move(a), smallest.multiplicity, std::move(constant)};
    }
    width *= 4;
  }
}

BigFloat growth_constant(int k, mpfr_prec_t precision) {
  const BigFloat theta = BigFloat::pi(precision) / BigFloat(k + 1, precision);
  const BigFloat c = cos(theta);
  return BigFloat(4, precision) * c * c;
}

BigFloat asymptotic_count(int k, unsigned r, long n, mpfr_prec_t precision) {
  if (k < 2) throw DomainError("k must be at least 2");
  const BigFloat theta = BigFloat::pi(precision) / BigFloat(k + 1, precision);
  const BigFloat s = sin(theta);
  const BigFloat leading = BigFloat(4, precision) * s * s / BigFloat(k + 1, precision);
  BigFloat value = pow(leading, static_cast<long>(r) + 1) * pow(BigFloat(n, precision), static_cast<long>(r)) *
                   pow(growth_constant(k, precision), n - static_cast<long>(r));
  for (unsigned i = 2; i <= r; ++i) value = value / BigFloat(static_cast<long>(i), precision);
  return value;
}

TruncatedSeries exact_counts(Family family, int k, unsigned r, std::size_t order) {
  if (family == Family::Avoid132Count12k) return r == 0 ? gf_avoiders_12k(k, order) : gf_exactly_r_12k(k, r, order);
  if (r == 0) return gf_avoiders_k1k(k, order);
  if (r <= static_cast<unsigned>(k - 1)) return gf_exactly_r_k1k(k, r, order);
  return y_stratum(gf_theorem8(k, order), r);
}

std::vector<TableRow> asymptotic_table(int k, unsigned r, long n_max, Family family, mpfr_prec_t precision) {
  std::vector<TableRow> rows;
  if (n_max <= 0) return rows;
  const TruncatedSeries exact = exact_counts(family, k, r, static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    BigInt count = exact[static_cast<std::size_t>(n)].get_num();
    BigFloat estimate = asymptotic_count(k, r, n, precision);
    BigFloat ratio = BigFloat(Rational(count), precision) / estimate;
    rows.push_back({n, std::move(count), std::move(estimate), std::move(ratio)});
  }
  return rows;
}

std::vector<TableRow> theta_probe(int k, unsigned r, long n_max, mpfr_prec_t precision, const OracleConfig& config) {
  if (k < 2) throw DomainError("k must be at least 2");
  std::vector<TableRow> rows;
  if (n_max <= 0) return rows;
  const auto order = static_cast<std::size_t>(n_max);
  std::optional<TruncatedSeries> closed;
  if (r == 0) closed = gf_avoiders_23k1(k, order);
  else if (k >= 3 && r <= static_cast<unsigned>(k - 1)) closed = gf_exactly_r_23k1(k, r, order);
  else if (order > config.max_n) throw BoundExceeded("theta probe n_max", n_max, static_cast<long>(config.max_n));

  const BigFloat rho = growth_constant(k, precision);
  for (long n = 1; n <= n_max; ++n) {
    BigInt count = closed ? BigInt((*closed)[static_cast<std::size_t>(n)].get_num())
                          : census(static_cast<std::size_t>(n), {Pattern::parse("132")}, Pattern::rotated_increasing(k),
                                   config)
                                .at(r);
    BigFloat estimate = pow(rho, n);
    BigFloat ratio = BigFloat(Rational(count), precision) / estimate;
    rows.push_back({n, std::move(count), std::move(estimate), std::move(ratio)});
  }
  return rows;
}

std::string to_csv(const std::vector<TableRow>& rows, int digits) {
  std::string out = "n,exact,estimate,ratio\n";
  for (const auto& row : rows)
    out += std::to_string(row.n) + "," + row.exact.get_str() + "," + row.estimate.to_string(digits) + "," +
           row.ratio.to_string(digits) + "\n";
  return out;
}

}  // namespace patterngf
