#include "patterngf/continued_fraction.hpp"

namespace patterngf {

namespace {

void require_k(int k) {
  if (k < 2) throw DomainError("pattern length k must be at least 2, got " + std::to_string(k));
}

BivariateSeries x_times_y_power(int k, std::size_t i, std::size_t order) {
  const auto exponent = binomial_u64(static_cast<long>(i) - 1, k - 1);
  return BivariateSeries::monomial(YPoly::monomial(1, exponent), 1, order);
}

}  // namespace

BivariateSeries gf_theorem1(int k, std::size_t order) {
  require_k(k);
  LevelWeights<YPoly> b = [order](std::size_t) { return BivariateSeries(order); };
  LevelWeights<YPoly> lambda = [k, order](std::size_t i) { return x_times_y_power(k, i, order); };
  return cf_motzkin(b, lambda, order);
}

BivariateSeries gf_theorem8(int k, std::size_t order) {
  require_k(k);
  LevelWeights<YPoly> nu = [k, order](std::size_t i) { return x_times_y_power(k, i, order); };
  LevelWeights<YPoly> lambda = [order](std::size_t) { return BivariateSeries::monomial(YPoly(1), 1, order); };
  return cf_peaked_dyck(nu, lambda, order);
}

}  // namespace patterngf
