#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxdesc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "3/2", "-7", "0".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p/q" or "p"; throws InvalidArgument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms. (mpq_class(p, q) alone does not reduce.)
Rational make_rational(long p, long q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // zero outside 0 <= k <= n
BigInt power_of_two(unsigned e);

}  // namespace coxdesc
