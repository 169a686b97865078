#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patterngf/asymptotics.hpp"
#include "patterngf/bijections.hpp"
#include "patterngf/closed_forms.hpp"
#include "patterngf/continued_fraction.hpp"
#include "patterngf/errors.hpp"
#include "patterngf/export.hpp"
#include "patterngf/orthopoly.hpp"
#include "patterngf/verify.hpp"

using namespace patterngf;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Per-height weights from a comma list; heights past the end reuse the last
// entry.
std::vector<Rational> parse_weights(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError(flag + " needs at least one weight");
  return out;
}

Rational weight_at(const std::vector<Rational>& w, std::size_t h) { return h < w.size() ? w[h] : w.back(); }

// ---------------------------------------------------------------- bijection

struct BijectionArgs {
  std::string map;
  std::string input;
};

int run_bijection(const BijectionArgs& a) {
  std::string out;
  if (a.map == "phi") out = phi(Permutation::parse(a.input)).to_string();
  else if (a.map == "psi") out = psi(Permutation::parse(a.input)).to_string();
  else if (a.map == "phi-inv") out = phi_inverse(LatticePath::parse(a.input)).to_string();
  else if (a.map == "psi-inv") out = psi_inverse(LatticePath::parse(a.input)).to_string();
  else if (a.map == "convert") out = convert_123_to_132(Permutation::parse(a.input)).to_string();
  else throw DomainError("unknown map '" + a.map + "'");
  std::cout << out << "\n";
  return 0;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  std::string theorem;
  int k = 0;
  std::optional<long> r;
  long order = 10;
  std::optional<std::string> y_at;
  std::string b = "0";
  std::string lambda = "1";
  std::string nu = "1";
  int strip = 2;
  int from = 0;
  int to = 0;
  bool json = false;
};

unsigned require_r(const SeriesArgs& a) {
  if (!a.r) throw DomainError("--theorem " + a.theorem + " needs --r");
  if (*a.r < 0) throw DomainError("r must be non-negative");
  return static_cast<unsigned>(*a.r);
}

int run_series(const SeriesArgs& a) {
  if (a.order < 0) throw DomainError("series order must be non-negative (got " + std::to_string(a.order) + ")");
  const auto order = static_cast<std::size_t>(a.order);
  std::optional<TruncatedSeries> single;
  std::optional<BivariateSeries> bivariate;

  const std::string& t = a.theorem;
  if (t == "1" || t == "8") {
    bivariate = t == "1" ? gf_theorem1(a.k, order) : gf_theorem8(a.k, order);
    if (a.r) single = y_stratum(*bivariate, require_r(a));
    else if (a.y_at) single = evaluate_y(*bivariate, parse_rational(*a.y_at));
  } else if (t == "2") {
    single = gf_avoiders_12k(a.k, order);
  } else if (t == "3") {
    single = gf_exactly_r_12k(a.k, require_r(a), order);
  } else if (t == "6") {
    single = gf_avoiders_23k1(a.k, order);
  } else if (t == "7") {
    single = gf_exactly_r_23k1(a.k, require_r(a), order);
  } else if (t == "9") {
    single = gf_avoiders_k1k(a.k, order);
  } else if (t == "10") {
    single = gf_exactly_r_k1k(a.k, require_r(a), order);
  } else if (t == "A1") {
    const auto b = parse_weights(a.b, "--b");
    const auto l = parse_weights(a.lambda, "--lambda");
    const LevelWeights<Rational> bw = [&](std::size_t h) { return TruncatedSeries::monomial(weight_at(b, h), 1, order); };
    const LevelWeights<Rational> lw = [&](std::size_t h) { return TruncatedSeries::monomial(weight_at(l, h), 2, order); };
    single = cf_motzkin(bw, lw, order);
  } else if (t == "A2") {
    const auto b = parse_weights(a.b, "--b");
    const auto l = parse_weights(a.lambda, "--lambda");
    const PolySystem sys([b](std::size_t h) { return weight_at(b, h); }, [l](std::size_t h) { return weight_at(l, h); });
    single = strip_gf(sys, a.strip, a.from, a.to, order);
  } else if (t == "A5") {
    const auto n = parse_weights(a.nu, "--nu");
    const auto l = parse_weights(a.lambda, "--lambda");
    const LevelWeights<Rational> nw = [&](std::size_t h) { return TruncatedSeries::monomial(weight_at(n, h), 1, order); };
    const LevelWeights<Rational> lw = [&](std::size_t h) { return TruncatedSeries::monomial(weight_at(l, h), 1, order); };
    single = cf_peaked_dyck(nw, lw, order);
  } else {
    throw DomainError("unknown theorem '" + t + "'");
  }

  if (a.json) {
    json data;
    data["theorem"] = t;
    data["k"] = a.k;
    data["r"] = a.r ? json(*a.r) : json(nullptr);
    data["order"] = a.order;
    if (single) data["coefficients"] = to_json(*single);
    else data["coefficients"] = to_json(*bivariate);
    std::cout << json_document("series", std::move(data)) << "\n";
  } else {
    std::cout << (single ? to_coefficient_list(*single) : to_coefficient_list(*bivariate)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  long n = 0;
  std::string avoid;
  std::string count;
  bool json = false;
};

int run_census(const CensusArgs& a) {
  if (a.n < 0) throw DomainError("n must be non-negative");
  std::vector<Pattern> avoid;
  for (const auto& p : split(a.avoid, ',')) avoid.push_back(Pattern::parse(p));
  const Census c = census(static_cast<std::size_t>(a.n), avoid, Pattern::parse(a.count), OracleConfig::from_environment());
  if (a.json) std::cout << json_document("census", to_json(c)) << "\n";
  else std::cout << census_csv(c);
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  long max_n = 9;
};

int run_verify(const VerifyArgs& a) {
  if (a.max_n < 0) throw DomainError("--max-n must be non-negative");
  VerifyOptions options;
  options.max_n = static_cast<std::size_t>(a.max_n);
  if (options.max_n > options.oracle.max_n)
    throw BoundExceeded("--max-n", a.max_n, static_cast<long>(options.oracle.max_n));
  const auto outcomes = run_suite(parse_suite(a.suite), options);
  std::size_t failed = 0;
  for (const auto& c : outcomes) {
    std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.suite << "] " << c.name << ": " << c.detail << "\n";
    if (!c.passed) ++failed;
  }
  std::cout << outcomes.size() - failed << " passed, " << failed << " failed\n";
  if (failed) {
    std::cerr << "verification failed:";
    for (const auto& c : outcomes)
      if (!c.passed) std::cerr << "\n  [" << c.suite << "] " << c.name;
    std::cerr << "\n";
    return kExitVerify;
  }
  return 0;
}

// ---------------------------------------------------------------- asymptotics

struct AsymptoticsArgs {
  int k = 3;
  long r = 0;
  long n_max = 20;
  std::string family = "132";
  bool theta = false;
  long precision = kDefaultPrecision;
  int digits = 20;
};

int run_asymptotics(const AsymptoticsArgs& a) {
  if (a.r < 0) throw DomainError("r must be non-negative");
  if (a.precision < MPFR_PREC_MIN) throw DomainError("precision too small");
  const auto r = static_cast<unsigned>(a.r);
  std::vector<TableRow> rows;
  if (a.theta) {
    rows = theta_probe(a.k, r, a.n_max, a.precision, OracleConfig::from_environment());
  } else {
    Family f;
    if (a.family == "132") f = Family::Avoid132Count12k;
    else if (a.family == "123") f = Family::Avoid123CountK1k;
    else throw DomainError("unknown family '" + a.family + "' (expected 132 or 123)");
    rows = asymptotic_table(a.k, r, a.n_max, f, a.precision);
  }
  std::cout << to_csv(rows, a.digits);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating functions, bijections and censuses for pattern-restricted permutations"};
  app.require_subcommand(1);

  BijectionArgs bij;
  auto* bcmd = app.add_subcommand("bijection", "Apply a permutation/Dyck path bijection");
  bcmd->add_option("--map", bij.map, "phi | phi-inv | psi | psi-inv | convert")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv", "convert"}));
  bcmd->add_option("--input", bij.input, "Permutation (digit word or spaced integers) or U/D path")->required();

  SeriesArgs ser;
  auto* scmd = app.add_subcommand("series", "Print an exact generating function");
  scmd->add_option("--theorem", ser.theorem,
                   "1: 132-avoiders by occurrences of 12...k (bivariate)\n"
                   "2: avoiders of 132 and 12...k\n"
                   "3: 132-avoiders with exactly r occurrences of 12...k\n"
                   "6: avoiders of 132 and 23...k1\n"
                   "7: 132-avoiders with exactly r occurrences of 23...k1\n"
                   "8: 123-avoiders by occurrences of (k-1)...1k (bivariate)\n"
                   "9: avoiders of 123 and (k-1)...1k\n"
                   "10: 123-avoiders with exactly r occurrences of (k-1)...1k\n"
                   "A1: weighted Motzkin continued fraction (--b, --lambda)\n"
                   "A2: Motzkin paths in a strip (--K, --from, --to, --b, --lambda)\n"
                   "A5: Dyck paths with peak weights (--nu, --lambda)")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "6", "7", "8", "9", "10", "A1", "A2", "A5"}));
  scmd->add_option("--k", ser.k, "Pattern length");
  scmd->add_option("--r", ser.r, "Number of occurrences");
  scmd->add_option("--order", ser.order, "Highest power of x")->required();
  scmd->add_option("--y-at", ser.y_at, "Substitute a rational value for y");
  scmd->add_option("--b", ser.b, "Level weights b_0,b_1,... (last value repeats)");
  scmd->add_option("--lambda", ser.lambda, "Down weights lambda_0,lambda_1,... (last value repeats)");
  scmd->add_option("--nu", ser.nu, "Peak weights nu_0,nu_1,... (last value repeats)");
  scmd->add_option("--K", ser.strip, "Strip height");
  scmd->add_option("--from", ser.from, "Start height");
  scmd->add_option("--to", ser.to, "End height");
  scmd->add_flag("--json", ser.json, "JSON output");

  CensusArgs cen;
  auto* ccmd = app.add_subcommand("census", "Histogram of pattern occurrences over restricted permutations");
  ccmd->add_option("--n", cen.n, "Permutation length")->required();
  ccmd->add_option("--avoid", cen.avoid, "Comma separated patterns to avoid")->required();
  ccmd->add_option("--count", cen.count, "Pattern whose occurrences are counted")->required();
  ccmd->add_flag("--json", cen.json, "JSON output (default CSV)");

  VerifyArgs ver;
  auto* vcmd = app.add_subcommand("verify", "Check the implementations against brute force");
  vcmd->add_option("--suite", ver.suite, "bijections | series | appendix | asymptotics | all")
      ->check(CLI::IsMember({"bijections", "series", "appendix", "asymptotics", "all"}));
  vcmd->add_option("--max-n", ver.max_n, "Largest permutation length");

  AsymptoticsArgs asy;
  auto* acmd = app.add_subcommand("asymptotics", "Exact counts against the leading-order estimate");
  acmd->add_option("--k", asy.k, "Pattern length")->required();
  acmd->add_option("--r", asy.r, "Number of occurrences");
  acmd->add_option("--n-max", asy.n_max, "Largest n")->required();
  acmd->add_option("--family", asy.family, "132 (12...k) or 123 ((k-1)...1k)");
  acmd->add_flag("--theta", asy.theta, "Normalize 23...k1 counts by (4 cos^2(pi/(k+1)))^n instead");
  acmd->add_option("--precision", asy.precision, "Working precision in bits");
  acmd->add_option("--digits", asy.digits, "Significant digits printed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    if (*bcmd) return run_bijection(bij);
    if (*scmd) return run_series(ser);
    if (*ccmd) return run_census(cen);
    if (*vcmd) return run_verify(ver);
    if (*acmd) return run_asymptotics(asy);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
