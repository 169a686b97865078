#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace patterngf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with C(a, b) = 0 whenever a < b or a < 0 or b < 0.
BigInt binomial(long a, long b);

/// Same convention, for exponents that must fit a machine word (y-degrees).
std::uint64_t binomial_u64(long a, long b);

BigInt catalan(unsigned n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q"; throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace patterngf
