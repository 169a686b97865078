#pragma once

#include <cstddef>
#include <functional>

#include "patterngf/errors.hpp"
#include "patterngf/series.hpp"

namespace patterngf {

template <class C>
using LevelWeights = std::function<Series<C>(std::size_t height)>;

/// Weighted Motzkin path generating function
///   1 / (1 - b_0 - lambda_1 / (1 - b_1 - lambda_2 / (... / (1 - b_{depth-1})))),
/// i.e. paths confined to heights below `depth`. Depth order + 1 is exact to
/// x^order whenever every lambda_h and b_h lacks a constant term.
template <class C>
Series<C> cf_motzkin(std::size_t depth, const LevelWeights<C>& b, const LevelWeights<C>& lambda, std::size_t order) {
  if (depth == 0) throw DomainError("continued fraction depth must be at least 1");
  const auto one = Series<C>::constant(C(1), order);
  Series<C> tail = one - b(depth - 1).truncated(order);
  for (std::size_t h = depth - 1; h-- > 0;) tail = one - b(h).truncated(order) - lambda(h + 1).truncated(order) / tail;
  return tail.reciprocal();
}

template <class C>
Series<C> cf_motzkin(const LevelWeights<C>& b, const LevelWeights<C>& lambda, std::size_t order) {
  return cf_motzkin(order + 1, b, lambda, order);
}

/// Dyck paths weighted by nu_h on down-steps closing a peak at height h and
/// lambda_h on the other down-steps:
///   1 / (1 - (nu_1 - lambda_1) - lambda_1 / (1 - (nu_2 - lambda_2) - ...)),
/// cut so that no path exceeds height `depth`.
template <class C>
Series<C> cf_peaked_dyck(std::size_t depth, const LevelWeights<C>& nu, const LevelWeights<C>& lambda,
                         std::size_t order) {
  if (depth == 0) throw DomainError("continued fraction depth must be at least 1");
  const auto one = Series<C>::constant(C(1), order);
  Series<C> tail = one;
  for (std::size_t h = depth; h >= 1; --h) {
    const Series<C> l = lambda(h).truncated(order);
    tail = one - (nu(h).truncated(order) - l) - l / tail;
  }
  return tail.reciprocal();
}

template <class C>
Series<C> cf_peaked_dyck(const LevelWeights<C>& nu, const LevelWeights<C>& lambda, std::size_t order) {
  return cf_peaked_dyck(order + 1, nu, lambda, order);
}

/// sum over 132-avoiders pi of y^{N(12...k; pi)} x^{|pi|}: the Motzkin fraction
/// with b = 0 and lambda_i = x y^{C(i-1, k-1)}.
BivariateSeries gf_theorem1(int k, std::size_t order);

/// sum over 123-avoiders pi of y^{N((k-1)...1k; pi)} x^{|pi|}: the peaked
/// fraction with lambda_i = x and nu_i = x y^{C(i-1, k-1)}.
BivariateSeries gf_theorem8(int k, std::size_t order);

}  // namespace patterngf
