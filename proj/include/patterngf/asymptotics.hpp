#pragma once

#include <string>
#include <vector>

#include "patterngf/big_float.hpp"
#include "patterngf/oracle.hpp"
#include "patterngf/polynomial.hpp"
#include "patterngf/series.hpp"

namespace patterngf {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// Leading-term data for the coefficients c_n of f(x) / ((x - a)^R g(x)),
/// where a > 0 is the unique zero of smallest modulus of the denominator:
///   c_n ~ (-1)^R n^{R-1} / (R-1)! a^{-n-R} f(a) / g(a).
struct AsymptoticEstimate {
  BigFloat root;
  unsigned multiplicity;
  /// f(a) / g(a)
  BigFloat constant;

  BigFloat operator()(long n) const;
};

/// Throws DomainError when the denominator has no zero, when its smallest
/// zero is not a positive real, or when another zero has the same modulus.
AsymptoticEstimate leading_term(const Polynomial& numerator, const Polynomial& denominator,
                                mpfr_prec_t precision = kDefaultPrecision);

/// 4 cos^2(pi / (k + 1))
BigFloat growth_constant(int k, mpfr_prec_t precision = kDefaultPrecision);

/// (4 sin^2(pi/(k+1)) / (k+1))^{r+1} n^r / r! (4 cos^2(pi/(k+1)))^{n-r}: the
/// estimate shared by 132-avoiders with r occurrences of 12...k and by
/// 123-avoiders with r occurrences of (k-1)...1k.
BigFloat asymptotic_count(int k, unsigned r, long n, mpfr_prec_t precision = kDefaultPrecision);

struct TableRow {
  long n;
  BigInt exact;
  BigFloat estimate;
  BigFloat ratio;  // exact / estimate
};

enum class Family {
  Avoid132Count12k,  // 132-avoiders, occurrences of 12...k
  Avoid123CountK1k,  // 123-avoiders, occurrences of (k-1)...1k
};

/// Exact count of the family with exactly r occurrences, for n = 0..order.
TruncatedSeries exact_counts(Family family, int k, unsigned r, std::size_t order);

/// Rows n = 1..n_max comparing exact counts with asymptotic_count.
std::vector<TableRow> asymptotic_table(int k, unsigned r, long n_max, Family family = Family::Avoid132Count12k,
                                       mpfr_prec_t precision = kDefaultPrecision);

/// Rows n = 1..n_max of (number of 132-avoiders with exactly r occurrences of
/// 23...k1) / (4 cos^2(pi/(k+1)))^n. Closed forms supply the counts when
/// r <= k - 1; otherwise the census does, within its bound.
std::vector<TableRow> theta_probe(int k, unsigned r, long n_max, mpfr_prec_t precision = kDefaultPrecision,
                                  const OracleConfig& config = OracleConfig{});

/// "n,exact,estimate,ratio" header plus one line per row.
std::string to_csv(const std::vector<TableRow>& rows, int digits = 20);

}  // namespace patterngf
