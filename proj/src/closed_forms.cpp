#include "patterngf/closed_forms.hpp"

#include "patterngf/errors.hpp"
#include "patterngf/half_power_series.hpp"
#include "patterngf/orthopoly.hpp"

namespace patterngf {

namespace {

void require_k(int k, int minimum = 2) {
  if (k < minimum)
    throw DomainError("k must be at least " + std::to_string(minimum) + ", got " + std::to_string(k));
}

void require_r_below_k(int k, unsigned r) {
  if (r < 1 || r > static_cast<unsigned>(k - 1))
    throw DomainError("r must lie in 1..k-1 = 1.." + std::to_string(k - 1) + ", got " + std::to_string(r));
}

Polynomial q(int n) { return q_polynomial(static_cast<std::size_t>(n)); }
Polynomial x_pow(unsigned e) { return Polynomial::monomial(1, e); }

HalfPowerSeries U(int n, int precision) { return chebyshev_u_at_half_inverse(static_cast<std::size_t>(n), precision); }
HalfPowerSeries t_pow(int e, int precision) { return HalfPowerSeries::monomial(1, e, precision); }

std::vector<unsigned> divisors(unsigned r) {
  std::vector<unsigned> d;
  for (unsigned l = 1; l <= r; ++l)
    if (r % l == 0) d.push_back(l);
  return d;
}

TruncatedSeries checked(const TruncatedSeries& primary, const TruncatedSeries& second, const char* what) {
  if (!(primary == second)) throw DualEvaluationMismatch(std::string("dual evaluation mismatch in ") + what);
  return primary;
}

void enumerate_solutions(const std::vector<std::uint64_t>& weights, std::size_t i, unsigned remaining,
                         std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
  if (i == weights.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (unsigned l = 0; l * weights[i] <= remaining; ++l) {
    current[i] = l;
    enumerate_solutions(weights, i + 1, remaining - static_cast<unsigned>(l * weights[i]), current, out);
  }
  current[i] = 0;
}

}  // namespace

std::vector<std::vector<unsigned>> exactly_r_12k_solutions(int k, unsigned r) {
  require_k(k);
  std::vector<std::uint64_t> weights;
  for (long i = 1;; ++i) {
    const auto w = binomial_u64(k - 2 + i, k - 1);
    if (w > r) break;
    weights.push_back(w);
  }
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(weights.size(), 0);
  enumerate_solutions(weights, 0, r, current, out);
  return out;
}

BigInt interleaving_count(const std::vector<unsigned>& l) {
  BigInt product = 1;
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i + 1] > 0) product *= binomial(static_cast<long>(l[i]) + l[i + 1] - 1, l[i + 1]);
  return product;
}

namespace q_form {

TruncatedSeries avoiders(int k, std::size_t order) {
  require_k(k);
  return expand_rational(q(k - 1), q(k), order);
}

TruncatedSeries exactly_r_12k(int k, unsigned r, std::size_t order) {
  require_k(k);
  if (r < 1) throw DomainError("r must be at least 1");
  TruncatedSeries total(order);
  for (const auto& l : exactly_r_12k_solutions(k, r)) {
    const BigInt weight = interleaving_count(l);
    if (weight == 0) continue;  // l_1 = 0 always lands here
    unsigned tail = 0;
    for (std::size_t i = 1; i < l.size(); ++i) tail += l[i];
    const Polynomial numerator = Rational(weight) * x_pow(l[0] + static_cast<unsigned>(k) - 1 + tail) * q(k - 1).pow(l[0] - 1);
    total += expand_rational(numerator, q(k).pow(l[0] + 1), order);
  }
  return total;
}

TruncatedSeries avoiders_23k1(int k, std::size_t order) {
  require_k(k);
  const TruncatedSeries inv_q = expand_rational(Polynomial{Rational(1)}, q(k - 1), order);
  const TruncatedSeries ratio = from_polynomial(q(k - 2), order) * inv_q;
  const TruncatedSeries block = from_polynomial(x_pow(static_cast<unsigned>(k) - 2), order) * inv_q * inv_q;
  const TruncatedSeries step = ratio.shifted(1);
  TruncatedSeries total = ratio;
  TruncatedSeries power = TruncatedSeries::constant(1, order);
  for (std::size_t s = 0; s < order; ++s) {
    total += (block * power).shifted(1);
    power = power * step;
  }
  return total;
}

TruncatedSeries exactly_one_23k1(int k, std::size_t order) {
  require_k(k, 3);
  return expand_rational(x_pow(static_cast<unsigned>(k)), q(k - 2) * q(k), order);
}

TruncatedSeries exactly_r_23k1(int k, unsigned r, std::size_t order) {
  require_k(k, 3);
  require_r_below_k(k, r);
  TruncatedSeries total(order);
  for (unsigned l : divisors(r)) {
    const unsigned m = r / l;
    const Polynomial numerator =
        Rational(catalan(l)) * x_pow(l + m + static_cast<unsigned>(k) - 2) * q(k - 3).pow(m - 1);
    total += expand_rational(numerator, q(k - 2).pow(m) * q(k), order);
  }
  return total;
}

TruncatedSeries exactly_r_k1k(int k, unsigned r, std::size_t order) {
  require_k(k);
  require_r_below_k(k, r);
  const Polynomial numerator = x_pow(r + static_cast<unsigned>(k) - 1) * q(k - 1).pow(r - 1);
  return expand_rational(numerator, q(k).pow(r + 1), order);
}

}  // namespace q_form

namespace half_power {

TruncatedSeries avoiders(int k, std::size_t order) {
  require_k(k);
  return evaluate_in_x([k](int P) { return U(k - 1, P) / (t_pow(1, P) * U(k, P)); }, order);
}

TruncatedSeries exactly_r_12k(int k, unsigned r, std::size_t order) {
  require_k(k);
  if (r < 1) throw DomainError("r must be at least 1");
  const auto solutions = exactly_r_12k_solutions(k, r);
  return evaluate_in_x(
      [&](int P) {
        HalfPowerSeries total(P);
        for (const auto& l : solutions) {
          const BigInt weight = interleaving_count(l);
          if (weight == 0) continue;
          int tail = 0;
          for (std::size_t i = 1; i < l.size(); ++i) tail += static_cast<int>(l[i]);
          const int l1 = static_cast<int>(l[0]);
          total += Rational(weight) * (U(k - 1, P).pow(l1 - 1) * U(k, P).pow(-(l1 + 1)) *
                                       t_pow((l1 - 1) + 2 * tail, P));
        }
        return total;
      },
      order);
}

TruncatedSeries avoiders_23k1(int k, std::size_t order) {
  require_k(k);
  return evaluate_in_x(
      [k, order](int P) {
        const HalfPowerSeries bounded = U(k - 2, P) / (t_pow(1, P) * U(k - 1, P));
        const HalfPowerSeries end_piece = (t_pow(1, P) * U(k - 1, P)).inverse();
        HalfPowerSeries total = bounded;
        HalfPowerSeries power = HalfPowerSeries::monomial(1, 0, P);
        // The s-th term carries x^{s+1}, so terms with s >= order vanish.
        for (std::size_t s = 0; s < order; ++s) {
          total += end_piece * power * end_piece * t_pow(2 * static_cast<int>(s + 1), P);
          power = power * bounded;
        }
        return total;
      },
      order);
}

TruncatedSeries exactly_one_23k1(int k, std::size_t order) {
  require_k(k, 3);
  return evaluate_in_x([k](int P) { return t_pow(2, P) / (U(k - 2, P) * U(k, P)); }, order);
}

TruncatedSeries exactly_r_23k1(int k, unsigned r, std::size_t order) {
  require_k(k, 3);
  require_r_below_k(k, r);
  return evaluate_in_x(
      [k, r](int P) {
        HalfPowerSeries sum(P);
        const HalfPowerSeries ratio = U(k - 3, P) / U(k - 2, P);
        for (unsigned l : divisors(r)) {
          const int m = static_cast<int>(r / l);
          // x^{l + r/(2l) - 1/2} = t^{2l + r/l - 1}
          sum += Rational(catalan(l)) * (t_pow(2 * static_cast<int>(l) + m - 1, P) * ratio.pow(m));
        }
        return sum / (U(k - 3, P) * U(k, P));
      },
      order);
}

TruncatedSeries exactly_r_k1k(int k, unsigned r, std::size_t order) {
  require_k(k);
  require_r_below_k(k, r);
  const int ri = static_cast<int>(r);
  return evaluate_in_x(
      [k, ri](int P) { return t_pow(ri - 1, P) * U(k - 1, P).pow(ri - 1) * U(k, P).pow(-(ri + 1)); }, order);
}

}  // namespace half_power

TruncatedSeries gf_avoiders_12k(int k, std::size_t order) {
  return checked(q_form::avoiders(k, order), half_power::avoiders(k, order), "gf_avoiders_12k");
}

TruncatedSeries gf_exactly_r_12k(int k, unsigned r, std::size_t order) {
  return checked(q_form::exactly_r_12k(k, r, order), half_power::exactly_r_12k(k, r, order), "gf_exactly_r_12k");
}

TruncatedSeries gf_avoiders_23k1(int k, std::size_t order) {
  return checked(half_power::avoiders_23k1(k, order), q_form::avoiders_23k1(k, order), "gf_avoiders_23k1");
}

TruncatedSeries gf_exactly_one_23k1(int k, std::size_t order) {
  return checked(q_form::exactly_one_23k1(k, order), half_power::exactly_one_23k1(k, order),
                 "gf_exactly_one_23k1");
}

TruncatedSeries gf_exactly_r_23k1(int k, unsigned r, std::size_t order) {
  return checked(q_form::exactly_r_23k1(k, r, order), half_power::exactly_r_23k1(k, r, order),
                 "gf_exactly_r_23k1");
}

TruncatedSeries gf_avoiders_k1k(int k, std::size_t order) {
  return checked(q_form::avoiders(k, order), half_power::avoiders(k, order), "gf_avoiders_k1k");
}

TruncatedSeries gf_exactly_r_k1k(int k, unsigned r, std::size_t order) {
  return checked(q_form::exactly_r_k1k(k, r, order), half_power::exactly_r_k1k(k, r, order), "gf_exactly_r_k1k");
}

}  // namespace patterngf
