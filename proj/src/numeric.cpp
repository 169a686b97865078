#include "patterngf/numeric.hpp"

#include <limits>
#include <sstream>

#include "patterngf/errors.hpp"

namespace patterngf {

PatternViolation::PatternViolation(const std::string& pattern, std::vector<std::size_t> positions)
    : DomainError([&] {
        std::ostringstream os;
        os << "input contains the pattern " << pattern << " at positions (";
        for (std::size_t i = 0; i < positions.size(); ++i) os << (i ? "," : "") << positions[i];
        os << ")";
        return os.str();
      }()),
      pattern_(pattern),
      positions_(std::move(positions)) {}

BoundExceeded::BoundExceeded(const std::string& what, long requested, long bound)
    : DomainError(what + " " + std::to_string(requested) + " exceeds the configured bound " +
                  std::to_string(bound)),
      bound_(bound) {}

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::uint64_t binomial_u64(long a, long b) {
  BigInt r = binomial(a, b);
  if (!r.fits_ulong_p()) throw DomainError("binomial coefficient too large for an exponent");
  return r.get_ui();
}

BigInt catalan(unsigned n) { return binomial(2L * n, n) / (n + 1); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw DomainError("malformed rational number '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace patterngf
