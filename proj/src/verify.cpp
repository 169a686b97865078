#include "patterngf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "patterngf/asymptotics.hpp"
#include "patterngf/bijections.hpp"
#include "patterngf/closed_forms.hpp"
#include "patterngf/continued_fraction.hpp"
#include "patterngf/errors.hpp"
#include "patterngf/orthopoly.hpp"

namespace patterngf {

Suite parse_suite(const std::string& name) {
  if (name == "bijections") return Suite::Bijections;
  if (name == "series") return Suite::Series;
  if (name == "appendix") return Suite::Appendix;
  if (name == "asymptotics") return Suite::Asymptotics;
  if (name == "all") return Suite::All;
  throw DomainError("unknown suite '" + name + "' (expected bijections, series, appendix, asymptotics or all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Bijections: return "bijections";
    case Suite::Series: return "series";
    case Suite::Appendix: return "appendix";
    case Suite::Asymptotics: return "asymptotics";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

// A failed check body returns the counterexample; an empty string is a pass.
using Body = std::function<std::string()>;

struct Recorder {
  std::string suite;
  std::vector<CheckOutcome>& out;

  void check(int criterion, const std::string& name, const Body& body, const std::string& summary = "ok") {
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    out.push_back({suite, criterion, name, failure.empty(), failure.empty() ? summary : failure});
  }
};

template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do f(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

std::string bound_tag(std::size_t n) { return " (n <= " + std::to_string(n) + ")"; }

std::string mismatch(const std::string& what, std::size_t n, const std::string& got, const std::string& want) {
  return what + " at n=" + std::to_string(n) + ": got " + got + ", expected " + want;
}

// ---------------------------------------------------------------- bijections

struct BijectionSpec {
  std::string name;
  Pattern avoid;
  std::function<LatticePath(const Permutation&)> forward;
  std::function<Permutation(const LatticePath&)> backward;
};

std::string check_bijection(const BijectionSpec& spec, std::size_t max_n) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::set<std::string> images;
    std::string failure;
    for_each_permutation(n, [&](const Permutation& pi) {
      if (!failure.empty() || !avoids(pi, spec.avoid)) return;
      const LatticePath p = spec.forward(pi);
      if (!p.is_closed_dyck() || p.length() != 2 * n)
        failure = spec.name + "(" + pi.to_string() + ") = " + p.to_string() + " is not a closed Dyck path of length 2n";
      else if (!images.insert(p.to_string()).second)
        failure = spec.name + " is not injective: repeated image " + p.to_string();
      else if (spec.backward(p) != pi)
        failure = "inverse of " + spec.name + " fails to recover " + pi.to_string();
    });
    if (!failure.empty()) return failure;
    if (BigInt(images.size()) != catalan(n))
      return mismatch(spec.name + " image size", n, std::to_string(images.size()), catalan(n).get_str());
    for (auto& path : enumerate_paths({2 * n, PathKind::Dyck, std::nullopt, 0, 0}, 2 * max_n)) {
      const Permutation pi = spec.backward(path);
      if (!avoids(pi, spec.avoid)) return "inverse image of " + path.to_string() + " contains " + spec.avoid.to_string();
      if (spec.forward(pi) != path) return spec.name + " does not invert its inverse at " + path.to_string();
    }
  }
  return {};
}

void bijection_suite(Recorder& r, const VerifyOptions& o) {
  const std::size_t N = o.max_n;
  const BijectionSpec phi_spec{"phi", Pattern::parse("132"), phi, phi_inverse};
  const BijectionSpec psi_spec{"psi", Pattern::parse("123"), psi, psi_inverse};

  r.check(1, "phi: 132-avoiders onto closed Dyck paths, both round trips" + bound_tag(N),
          [&] { return check_bijection(phi_spec, N); });
  r.check(1, "psi: 123-avoiders onto closed Dyck paths, both round trips" + bound_tag(N),
          [&] { return check_bijection(psi_spec, N); });
  r.check(1, "phi agrees with the left-to-right minima construction" + bound_tag(N), [&]() -> std::string {
    const Pattern p132 = Pattern::parse("132");
    for (std::size_t n = 0; n <= N; ++n) {
      std::string failure;
      for_each_permutation(n, [&](const Permutation& pi) {
        if (failure.empty() && avoids(pi, p132) && phi(pi) != phi_via_minima(pi))
          failure = "phi and phi_via_minima differ at " + pi.to_string();
      });
      if (!failure.empty()) return failure;
    }
    return {};
  });
  r.check(1, "figure triple 74352681 <-> UUDUUUDUDDUDDDUD <-> 58327641", []() -> std::string {
    const auto a = Permutation::parse("74352681");
    const auto b = Permutation::parse("58327641");
    const auto path = LatticePath::parse("UUDUUUDUDDUDDDUD");
    if (phi(a) != path) return "phi(74352681) = " + phi(a).to_string();
    if (psi(b) != path) return "psi(58327641) = " + psi(b).to_string();
    if (phi_inverse(path) != a) return "phi_inverse gives " + phi_inverse(path).to_string();
    if (psi_inverse(path) != b) return "psi_inverse gives " + psi_inverse(path).to_string();
    if (convert_123_to_132(b) != a) return "convert_123_to_132(58327641) = " + convert_123_to_132(b).to_string();
    return {};
  });

  for (int k = 2; k <= 5; ++k) {
    const Pattern inc = Pattern::increasing(k);
    const Pattern dm = Pattern::decreasing_then_max(k);
    r.check(2, "occurrences of " + inc.to_string() + " equal w1(" + std::to_string(k) + ", phi)" + bound_tag(N),
            [&, k]() -> std::string {
              const Pattern p132 = Pattern::parse("132");
              for (std::size_t n = 0; n <= N; ++n) {
                std::string failure;
                for_each_permutation(n, [&](const Permutation& pi) {
                  if (!failure.empty() || !avoids(pi, p132)) return;
                  const BigInt a = count_occurrences(pi, inc);
                  const BigInt b = weight_w1(k, phi(pi));
                  if (a != b) failure = pi.to_string() + ": " + a.get_str() + " occurrences, w1 = " + b.get_str();
                });
                if (!failure.empty()) return failure;
              }
              return {};
            });
    r.check(2, "occurrences of " + dm.to_string() + " equal w2(" + std::to_string(k) + ", psi)" + bound_tag(N),
            [&, k]() -> std::string {
              const Pattern p123 = Pattern::parse("123");
              for (std::size_t n = 0; n <= N; ++n) {
                std::string failure;
                for_each_permutation(n, [&](const Permutation& pi) {
                  if (!failure.empty() || !avoids(pi, p123)) return;
                  const BigInt a = count_occurrences(pi, dm);
                  const BigInt b = weight_w2(k, psi(pi));
                  if (a != b) failure = pi.to_string() + ": " + a.get_str() + " occurrences, w2 = " + b.get_str();
                });
                if (!failure.empty()) return failure;
              }
              return {};
            });
  }
  r.check(2, "figure path has w1(3) = 8 and w2(3) = 7", []() -> std::string {
    const auto path = LatticePath::parse("UUDUUUDUDDUDDDUD");
    if (weight_w1(3, path) != 8) return "w1 = " + weight_w1(3, path).get_str();
    if (weight_w2(3, path) != 7) return "w2 = " + weight_w2(3, path).get_str();
    return {};
  });
}

// ---------------------------------------------------------------- series

enum class CensusFamily { P132Inc, P123DecMax, P132Rot };

class CensusCache {
 public:
  explicit CensusCache(const OracleConfig& c) : config_(c) {}

  const Census& get(CensusFamily f, int k, std::size_t n) {
    const auto key = std::make_tuple(static_cast<int>(f), k, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Pattern avoid = Pattern::parse(f == CensusFamily::P123DecMax ? "123" : "132");
    const Pattern count = f == CensusFamily::P132Inc      ? Pattern::increasing(k)
                          : f == CensusFamily::P123DecMax ? Pattern::decreasing_then_max(k)
                                                    : Pattern::rotated_increasing(k);
    return cache_.emplace(key, census(n, {avoid}, count, config_)).first->second;
  }

 private:
  OracleConfig config_;
  std::map<std::tuple<int, int, std::size_t>, Census> cache_;
};

std::string compare_to_census(const TruncatedSeries& s, CensusCache& cache, CensusFamily f, int k, unsigned r,
                              std::size_t N) {
  for (std::size_t n = 0; n <= N; ++n) {
    const BigInt want = cache.get(f, k, n).at(BigInt(r));
    if (s[n] != Rational(want)) return mismatch("coefficient", n, to_string(s[n]), want.get_str());
  }
  return {};
}

std::string compare_bivariate(const BivariateSeries& s, CensusCache& cache, CensusFamily f, int k, std::size_t N) {
  for (std::size_t n = 0; n <= N; ++n) {
    const Census& c = cache.get(f, k, n);
    YPoly want;
    for (const auto& [occ, count] : c.histogram) want += YPoly::monomial(count, occ.get_ui());
    if (s[n] != want) return mismatch("y-polynomial", n, s[n].to_string(), want.to_string());
  }
  return {};
}

std::string compare_series(const TruncatedSeries& a, const TruncatedSeries& b, const std::string& what) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= order; ++n)
    if (a[n] != b[n]) return mismatch(what, n, to_string(a[n]), to_string(b[n]));
  return {};
}

void series_suite(Recorder& r, const VerifyOptions& o) {
  const std::size_t N = o.max_n;
  CensusCache cache(o.oracle);
  constexpr std::size_t kIdentityOrder = 12;

  for (int k = 2; k <= 5; ++k) {
    const std::string ks = std::to_string(k);
    r.check(3, "continued fraction for 132-avoiders by " + Pattern::increasing(k).to_string() + " matches census" +
                   bound_tag(N),
            [&, k] { return compare_bivariate(gf_theorem1(k, N), cache, CensusFamily::P132Inc, k, N); });
    r.check(3, "continued fraction for 123-avoiders by " + Pattern::decreasing_then_max(k).to_string() +
                   " matches census" + bound_tag(N),
            [&, k] { return compare_bivariate(gf_theorem8(k, N), cache, CensusFamily::P123DecMax, k, N); });
    r.check(3, "both continued fractions give Catalan numbers at y = 1 (k = " + ks + ")", [k]() -> std::string {
      std::vector<Rational> cat;
      for (std::size_t n = 0; n <= kIdentityOrder; ++n) cat.emplace_back(catalan(n));
      const TruncatedSeries want(cat);
      if (auto f = compare_series(evaluate_y(gf_theorem1(k, kIdentityOrder), 1), want, "132 series"); !f.empty())
        return f;
      return compare_series(evaluate_y(gf_theorem8(k, kIdentityOrder), 1), want, "123 series");
    });
  }

  for (int k = 2; k <= 5; ++k) {
    const std::string ks = "k = " + std::to_string(k);
    r.check(4, "avoiders of 132 and 12...k, " + ks + bound_tag(N),
            [&, k] { return compare_to_census(gf_avoiders_12k(k, N), cache, CensusFamily::P132Inc, k, 0, N); });
    for (unsigned rr = 1; rr <= 6; ++rr)
      r.check(4, "132-avoiders with " + std::to_string(rr) + " occurrences of 12...k, " + ks + bound_tag(N),
              [&, k, rr] { return compare_to_census(gf_exactly_r_12k(k, rr, N), cache, CensusFamily::P132Inc, k, rr, N); });
    r.check(4, "avoiders of 132 and 23...k1, " + ks + bound_tag(N),
            [&, k] { return compare_to_census(gf_avoiders_23k1(k, N), cache, CensusFamily::P132Rot, k, 0, N); });
    if (k >= 3)
      for (unsigned rr = 1; rr <= static_cast<unsigned>(k - 1); ++rr)
        r.check(4, "132-avoiders with " + std::to_string(rr) + " occurrences of 23...k1, " + ks + bound_tag(N),
                [&, k, rr] {
                  return compare_to_census(gf_exactly_r_23k1(k, rr, N), cache, CensusFamily::P132Rot, k, rr, N);
                });
    r.check(4, "avoiders of 123 and (k-1)...1k, " + ks + bound_tag(N),
            [&, k] { return compare_to_census(gf_avoiders_k1k(k, N), cache, CensusFamily::P123DecMax, k, 0, N); });
    for (unsigned rr = 1; rr <= static_cast<unsigned>(k - 1); ++rr)
      r.check(4, "123-avoiders with " + std::to_string(rr) + " occurrences of (k-1)...1k, " + ks + bound_tag(N),
              [&, k, rr] {
                return compare_to_census(gf_exactly_r_k1k(k, rr, N), cache, CensusFamily::P123DecMax, k, rr, N);
              });

    r.check(4, "the three avoider series coincide to order 12, " + ks, [k]() -> std::string {
      const auto a = gf_avoiders_12k(k, kIdentityOrder);
      if (auto f = compare_series(gf_avoiders_23k1(k, kIdentityOrder), a, "23...k1 vs 12...k"); !f.empty()) return f;
      return compare_series(gf_avoiders_k1k(k, kIdentityOrder), a, "(k-1)...1k vs 12...k");
    });
    r.check(4, "y-strata of the continued fractions equal the closed forms, " + ks, [k]() -> std::string {
      const auto t1 = gf_theorem1(k, kIdentityOrder);
      for (unsigned rr = 0; rr <= 6; ++rr) {
        const auto want = rr == 0 ? gf_avoiders_12k(k, kIdentityOrder) : gf_exactly_r_12k(k, rr, kIdentityOrder);
        if (auto f = compare_series(y_stratum(t1, rr), want, "132 stratum r=" + std::to_string(rr)); !f.empty())
          return f;
      }
      const auto t8 = gf_theorem8(k, kIdentityOrder);
      for (unsigned rr = 0; rr <= static_cast<unsigned>(k - 1); ++rr) {
        const auto want = rr == 0 ? gf_avoiders_k1k(k, kIdentityOrder) : gf_exactly_r_k1k(k, rr, kIdentityOrder);
        if (auto f = compare_series(y_stratum(t8, rr), want, "123 stratum r=" + std::to_string(rr)); !f.empty())
          return f;
      }
      return {};
    });
  }

  r.check(3, "census totals are Catalan numbers" + bound_tag(N), [&]() -> std::string {
    for (std::size_t n = 0; n <= N; ++n)
      for (CensusFamily f : {CensusFamily::P132Inc, CensusFamily::P123DecMax})
        if (cache.get(f, 3, n).total() != catalan(n))
          return mismatch("census total", n, cache.get(f, 3, n).total().get_str(), catalan(n).get_str());
    return {};
  });
  r.check(7, "census is identical for 1 and 4 workers (n = 8)", [&]() -> std::string {
    OracleConfig one = o.oracle, four = o.oracle;
    one.threads = 1;
    four.threads = 4;
    const auto a = census(8, {Pattern::parse("132")}, Pattern::increasing(3), one);
    const auto b = census(8, {Pattern::parse("132")}, Pattern::increasing(3), four);
    return a.histogram == b.histogram ? "" : "histograms differ";
  });
}

// ---------------------------------------------------------------- appendix

struct WeightDraw {
  std::vector<Rational> b, lambda, nu;
};

WeightDraw draw_weights(std::mt19937_64& rng, std::size_t heights) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  auto nonzero = [&] {
    int p = 0;
    while (p == 0) p = num(rng);
    return Rational(p, den(rng));
  };
  WeightDraw w;
  for (std::size_t i = 0; i < heights; ++i) {
    Rational b(num(rng), den(rng));
    b.canonicalize();
    Rational l = nonzero(), v = nonzero();
    l.canonicalize();
    v.canonicalize();
    w.b.push_back(b);
    w.lambda.push_back(l);
    w.nu.push_back(v);
  }
  return w;
}

// Transfer-matrix count of weighted Motzkin paths in the strip [0, K].
std::vector<std::vector<Rational>> strip_dp(const WeightDraw& w, int K, int from, std::size_t length) {
  std::vector<std::vector<Rational>> table;
  std::vector<Rational> cur(static_cast<std::size_t>(K) + 1);
  cur[static_cast<std::size_t>(from)] = 1;
  table.push_back(cur);
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Rational> next(cur.size());
    for (int h = 0; h <= K; ++h) {
      const Rational& c = cur[static_cast<std::size_t>(h)];
      if (c == 0) continue;
      next[static_cast<std::size_t>(h)] += c * w.b[static_cast<std::size_t>(h)];
      if (h < K) next[static_cast<std::size_t>(h) + 1] += c;
      if (h > 0) next[static_cast<std::size_t>(h) - 1] += c * w.lambda[static_cast<std::size_t>(h)];
    }
    cur = std::move(next);
    table.push_back(cur);
  }
  return table;
}

WeightSpec to_spec(const WeightDraw& w, bool peaked) {
  WeightSpec s;
  for (std::size_t h = 0; h < w.b.size(); ++h) {
    s.level[static_cast<int>(h)] = w.b[h];
    if (h > 0) s.down[static_cast<int>(h)] = w.lambda[h];
  }
  if (peaked) {
    s.level.clear();
    s.peak.emplace();
    for (std::size_t h = 1; h < w.nu.size(); ++h) (*s.peak)[static_cast<int>(h)] = w.nu[h];
  }
  return s;
}

PolySystem system_of(const WeightDraw& w) {
  auto at = [](const std::vector<Rational>& v) {
    return [v](std::size_t i) -> Rational {
      if (i >= v.size()) throw DomainError("weight index out of range");
      return v[i];
    };
  };
  return PolySystem(at(w.b), at(w.lambda));
}

void appendix_suite(Recorder& r, const VerifyOptions& o) {
  constexpr int kMaxStrip = 4;
  constexpr std::size_t kLength = 12;
  constexpr std::size_t kHeights = 24;
  std::mt19937_64 rng(o.seed);
  std::vector<WeightDraw> draws;
  for (unsigned i = 0; i < o.weight_draws; ++i) draws.push_back(draw_weights(rng, kHeights));
  const std::string tag = " (" + std::to_string(draws.size()) + " random weight draws)";

  r.check(5, "strip generating function equals the transfer DP, K <= 4, length <= 12" + tag, [&]() -> std::string {
    for (std::size_t d = 0; d < draws.size(); ++d) {
      const PolySystem sys = system_of(draws[d]);
      for (int K = 0; K <= kMaxStrip; ++K)
        for (int from = 0; from <= K; ++from) {
          const auto dp = strip_dp(draws[d], K, from, kLength);
          for (int to = 0; to <= K; ++to) {
            const auto s = strip_gf(sys, K, from, to, kLength);
            for (std::size_t m = 0; m <= kLength; ++m)
              if (s[m] != dp[m][static_cast<std::size_t>(to)])
                return "draw " + std::to_string(d) + ", K=" + std::to_string(K) + ", " + std::to_string(from) +
                       "->" + std::to_string(to) + ", length " + std::to_string(m) + ": " + to_string(s[m]) +
                       " vs " + to_string(dp[m][static_cast<std::size_t>(to)]);
          }
        }
    }
    return {};
  });
  r.check(5, "strip generating function equals path_census, K <= 4, length <= 12" + tag, [&]() -> std::string {
    for (std::size_t d = 0; d < draws.size(); ++d) {
      const PolySystem sys = system_of(draws[d]);
      const WeightSpec spec = to_spec(draws[d], false);
      for (int K = 0; K <= kMaxStrip; ++K)
        for (int from = 0; from <= K; ++from)
          for (int to = 0; to <= K; ++to) {
            const auto s = strip_gf(sys, K, from, to, kLength);
            for (std::size_t m = 0; m <= kLength; ++m) {
              const Rational want = path_census({m, PathKind::Motzkin, K, from, to}, spec, o.oracle);
              if (s[m] != want)
                return "draw " + std::to_string(d) + ", K=" + std::to_string(K) + ", " + std::to_string(from) +
                       "->" + std::to_string(to) + ", length " + std::to_string(m) + ": " + to_string(s[m]) +
                       " vs " + to_string(want);
            }
          }
    }
    return {};
  });
  r.check(5, "Motzkin continued fraction equals path_census, length <= 12" + tag, [&]() -> std::string {
    for (std::size_t d = 0; d < draws.size(); ++d) {
      const WeightDraw& w = draws[d];
      const LevelWeights<Rational> b = [&](std::size_t h) { return TruncatedSeries::monomial(w.b.at(h), 1, kLength); };
      const LevelWeights<Rational> l = [&](std::size_t h) {
        return TruncatedSeries::monomial(w.lambda.at(h), 2, kLength);
      };
      const auto f = cf_motzkin(b, l, kLength);
      const WeightSpec spec = to_spec(w, false);
      for (std::size_t m = 0; m <= kLength; ++m) {
        const Rational want = path_census({m, PathKind::Motzkin, std::nullopt, 0, 0}, spec, o.oracle);
        if (f[m] != want)
          return "draw " + std::to_string(d) + ", length " + std::to_string(m) + ": " + to_string(f[m]) + " vs " +
                 to_string(want);
      }
    }
    return {};
  });
  r.check(5, "peaked Dyck continued fraction equals path_census, length <= 12" + tag, [&]() -> std::string {
    for (std::size_t d = 0; d < draws.size(); ++d) {
      const WeightDraw& w = draws[d];
      const std::size_t order = kLength / 2;
      const LevelWeights<Rational> nu = [&](std::size_t h) { return TruncatedSeries::monomial(w.nu.at(h), 1, order); };
      const LevelWeights<Rational> l = [&](std::size_t h) {
        return TruncatedSeries::monomial(w.lambda.at(h), 1, order);
      };
      const auto f = cf_peaked_dyck(nu, l, order);
      const WeightSpec spec = to_spec(w, true);
      for (std::size_t m = 0; m <= order; ++m) {
        const Rational want = path_census({2 * m, PathKind::Dyck, std::nullopt, 0, 0}, spec, o.oracle);
        if (f[m] != want)
          return "draw " + std::to_string(d) + ", semilength " + std::to_string(m) + ": " + to_string(f[m]) + " vs " +
                 to_string(want);
      }
    }
    return {};
  });
  r.check(5, "reciprocal polynomials equal coefficient reversal, n <= 12" + tag, [&]() -> std::string {
    for (const auto& w : draws) {
      const PolySystem sys = system_of(w);
      for (std::size_t n = 0; n <= 12; ++n)
        if (sys.p_star(n) != sys.p(n).reciprocal(n))
          return "n=" + std::to_string(n) + ": " + sys.p_star(n).to_string() + " vs " +
                 sys.p(n).reciprocal(n).to_string();
    }
    return {};
  });

  r.check(5, "b = 0, lambda = 1 gives p_n(x) = U_n(x/2), n <= 8", []() -> std::string {
    const PolySystem sys = PolySystem::constant(0, 1);
    const Polynomial half{Rational(0), Rational(1, 2)};
    for (std::size_t n = 0; n <= 8; ++n)
      if (sys.p(n) != chebyshev_u(n).compose(half))
        return "n=" + std::to_string(n) + ": " + sys.p(n).to_string();
    return {};
  });
  r.check(5, "b = 1, lambda = 1 gives p_n(x) = U_n((x-1)/2), n <= 8", []() -> std::string {
    const PolySystem sys = PolySystem::constant(1, 1);
    const Polynomial shifted_half{Rational(-1, 2), Rational(1, 2)};
    for (std::size_t n = 0; n <= 8; ++n)
      if (sys.p(n) != chebyshev_u(n).compose(shifted_half))
        return "n=" + std::to_string(n) + ": " + sys.p(n).to_string();
    return {};
  });
  r.check(5, "q_n(x^2) equals the reciprocal polynomial for b = 0, lambda = 1, n <= 12", []() -> std::string {
    const PolySystem sys = PolySystem::constant(0, 1);
    const Polynomial square = Polynomial::monomial(1, 2);
    for (std::size_t n = 0; n <= 12; ++n)
      if (q_polynomial(n).compose(square) != sys.p_star(n)) return "n=" + std::to_string(n);
    return {};
  });
}

// ---------------------------------------------------------------- asymptotics

std::string relative_error_string(const BigFloat& e) { return e.to_string(6); }

void asymptotics_suite(Recorder& r, const VerifyOptions&) {
  constexpr mpfr_prec_t prec = kDefaultPrecision;
  const BigFloat exactness = pow(BigFloat(2, prec), -100);

  r.check(6, "asymptotic_count(3, 0, n) = 2^(n-1), n <= 60", [&]() -> std::string {
    for (long n = 1; n <= 60; ++n) {
      const BigFloat v = asymptotic_count(3, 0, n, prec);
      BigInt want = 1;
      want <<= static_cast<mp_bitcnt_t>(n - 1);
      const BigFloat w(Rational(want), prec);
      if (v.round() != want || abs((v - w) / w) > exactness)
        return "n=" + std::to_string(n) + ": " + v.to_string(40);
    }
    return {};
  }, "equal to 2^(n-1) within 2^-100 relative and rounds to it exactly");
  r.check(6, "asymptotic_count(2, 0, n) = 1, n <= 60", [&]() -> std::string {
    for (long n = 1; n <= 60; ++n) {
      const BigFloat v = asymptotic_count(2, 0, n, prec);
      if (v.round() != 1 || abs(v - BigFloat(1, prec)) > exactness) return "n=" + std::to_string(n) + ": " + v.to_string(40);
    }
    return {};
  }, "equal to 1 within 2^-100 and rounds to it exactly");

  for (auto family : {CensusFamily::P132Inc, CensusFamily::P123DecMax}) {
    const auto fam = family == CensusFamily::P132Inc ? patterngf::Family::Avoid132Count12k : patterngf::Family::Avoid123CountK1k;
    const std::string fname = family == CensusFamily::P132Inc ? "132 / 12...k" : "123 / (k-1)...1k";
    for (int k : {3, 4})
      for (unsigned rr : {0U, 1U, 2U}) {
        auto summary = std::make_shared<std::string>();
        r.check(6, "relative error decreases from n=20 to n=40 and is below 15% at n=40: " + fname + ", k=" +
                       std::to_string(k) + ", r=" + std::to_string(rr),
                [&, k, rr, summary]() -> std::string {
                  const auto exact = exact_counts(fam, k, rr, 40);
                  auto err = [&](long n) {
                    const BigFloat e(exact[static_cast<std::size_t>(n)], prec);
                    return abs(e / asymptotic_count(k, rr, n, prec) - BigFloat(1, prec));
                  };
                  const BigFloat e20 = err(20), e40 = err(40);
                  *summary = "err(20)=" + relative_error_string(e20) + " err(40)=" + relative_error_string(e40);
                  // Exact estimates sit at the precision floor at both points.
                  const bool floor = e20 <= exactness && e40 <= exactness;
                  if (!(e40 < e20) && !floor) return "error did not decrease: " + *summary;
                  if (!(e40 < BigFloat(Rational(15, 100), prec))) return "error at n=40 too large: " + *summary;
                  return {};
                });
        if (r.out.back().passed) r.out.back().detail = *summary;
      }
  }

  r.check(6, "smallest zero of q_k equals 1/(4 cos^2(pi/(k+1))) within 1e-20, k = 2..8", [&]() -> std::string {
    const BigFloat tol(Rational(1, BigInt("100000000000000000000")), prec);
    for (int k = 2; k <= 8; ++k) {
      const auto est = leading_term(Polynomial{Rational(1)}, q_polynomial(static_cast<std::size_t>(k)), prec);
      const BigFloat want = BigFloat(1, prec) / growth_constant(k, prec);
      if (abs(est.root - want) > tol)
        return "k=" + std::to_string(k) + ": " + est.root.to_string(30) + " vs " + want.to_string(30);
      if (est.multiplicity != 1) return "k=" + std::to_string(k) + ": multiplicity " + std::to_string(est.multiplicity);
    }
    return {};
  });
  r.check(6, "leading term of q_{k-1}/q_k reproduces asymptotic_count(k, 0, n) within 1e-9, k = 2..6",
          [&]() -> std::string {
            const BigFloat tol(Rational(1, 1000000000), prec);
            for (int k = 2; k <= 6; ++k) {
              const auto est = leading_term(q_polynomial(static_cast<std::size_t>(k - 1)),
                                            q_polynomial(static_cast<std::size_t>(k)), prec);
              for (long n : {10L, 40L, 100L}) {
                const BigFloat a = est(n), b = asymptotic_count(k, 0, n, prec);
                if (abs(a / b - BigFloat(1, prec)) > tol)
                  return "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": " + a.to_string(20) + " vs " +
                         b.to_string(20);
              }
            }
            return {};
          });
  r.check(6, "leading term of (1-x)/(1-2x) is exactly 2^(n-1)", [&]() -> std::string {
    const auto est = leading_term(Polynomial{1, -1}, Polynomial{1, -2}, prec);
    for (long n = 1; n <= 30; ++n) {
      BigInt want = 1;
      want <<= static_cast<mp_bitcnt_t>(n - 1);
      if (est(n).round() != want) return "n=" + std::to_string(n) + ": " + est(n).to_string(30);
    }
    return {};
  });
}

}  // namespace

std::vector<CheckOutcome> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<CheckOutcome> out;
  auto run = [&](Suite s, void (*body)(Recorder&, const VerifyOptions&)) {
    if (suite != s && suite != Suite::All) return;
    Recorder r{suite_name(s), out};
    body(r, options);
  };
  run(Suite::Bijections, bijection_suite);
  run(Suite::Series, series_suite);
  run(Suite::Appendix, appendix_suite);
  run(Suite::Asymptotics, asymptotics_suite);
  return out;
}

}  // namespace patterngf
