#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "patterngf/series.hpp"

namespace patterngf {

/// The two evaluations of a closed form (q-polynomial ratio and the
/// expression in t = sqrt(x)) disagree.
class DualEvaluationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 132-avoiders that also avoid 12...k: U_{k-1}(1/(2 sqrt x)) / (sqrt x U_k(1/(2 sqrt x))),
/// which is q_{k-1}/q_k.
TruncatedSeries gf_avoiders_12k(int k, std::size_t order);

/// Nonnegative (l_1, l_2, ...) with sum_i l_i C(k-2+i, k-1) = r. Indices whose
/// weight exceeds r are omitted, so each vector has one entry per weight <= r.
std::vector<std::vector<unsigned>> exactly_r_12k_solutions(int k, unsigned r);

/// prod_i C(l_i + l_{i+1} - 1, l_{i+1}), a factor being 1 when l_{i+1} = 0.
BigInt interleaving_count(const std::vector<unsigned>& l);

/// 132-avoiders with exactly r >= 1 occurrences of 12...k: sum over the
/// solutions above of
///   interleaving_count(l) q_{k-1}^{l_1-1} x^{l_1+k-1+l_2+l_3+...} / q_k^{l_1+1}.
TruncatedSeries gf_exactly_r_12k(int k, unsigned r, std::size_t order);

/// 132-avoiders that also avoid 23...k1, assembled from the path decomposition
/// "bounded prefix, s rising blocks, descent" as a geometric series in s.
TruncatedSeries gf_avoiders_23k1(int k, std::size_t order);

/// 132-avoiders with exactly one occurrence of 23...k1: x / (U_{k-2} U_k), k >= 3.
TruncatedSeries gf_exactly_one_23k1(int k, std::size_t order);

/// 132-avoiders with exactly r occurrences of 23...k1 for 3 <= k, 1 <= r <= k-1:
///   1/(U_{k-3} U_k) sum_{l | r} Cat(l) x^{l + r/(2l) - 1/2} (U_{k-3}/U_{k-2})^{r/l}.
TruncatedSeries gf_exactly_r_23k1(int k, unsigned r, std::size_t order);

/// 123-avoiders that also avoid (k-1)...1k; same expression as gf_avoiders_12k.
TruncatedSeries gf_avoiders_k1k(int k, std::size_t order);

/// 123-avoiders with exactly r occurrences of (k-1)...1k, 1 <= r <= k-1:
/// x^{(r-1)/2} U_{k-1}^{r-1} / U_k^{r+1}, i.e. q_{k-1}^{r-1} x^{r+k-1} / q_k^{r+1}.
TruncatedSeries gf_exactly_r_k1k(int k, unsigned r, std::size_t order);

/// The individual evaluation routes, exposed for cross-checks.
namespace q_form {
TruncatedSeries avoiders(int k, std::size_t order);
TruncatedSeries exactly_r_12k(int k, unsigned r, std::size_t order);
TruncatedSeries avoiders_23k1(int k, std::size_t order);
TruncatedSeries exactly_one_23k1(int k, std::size_t order);
TruncatedSeries exactly_r_23k1(int k, unsigned r, std::size_t order);
TruncatedSeries exactly_r_k1k(int k, unsigned r, std::size_t order);
}  // namespace q_form

namespace half_power {
TruncatedSeries avoiders(int k, std::size_t order);
TruncatedSeries exactly_r_12k(int k, unsigned r, std::size_t order);
TruncatedSeries avoiders_23k1(int k, std::size_t order);
TruncatedSeries exactly_one_23k1(int k, std::size_t order);
TruncatedSeries exactly_r_23k1(int k, unsigned r, std::size_t order);
TruncatedSeries exactly_r_k1k(int k, unsigned r, std::size_t order);
}  // namespace half_power

}  // namespace patterngf
