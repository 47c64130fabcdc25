#pragma once

// Exact integer and rational value types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace binetkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// x^k for signed k; throws std::domain_error for 0^k with k < 0.
Rational pow(const Rational& x, long k);
Integer pow(const Integer& x, unsigned long k);

/// Parses "7", "-3", "22/7" or a terminating decimal such as "0.25" or "1e-30".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// (-1)^k for any signed k.
constexpr int minus_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace binetkit
