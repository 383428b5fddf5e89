#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace downup {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator; zero is 0/1.
using Scalar = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den = 0.
Scalar rational(long num, long den);

/// Parses "a" or "a/b" (optional sign). Throws ParseError.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// 1 + x + ... + x^(n-1); equals (x^n - 1)/(x - 1) for x != 1 and n for x = 1.
Scalar geometric_sum(const Scalar& x, unsigned n);

Scalar power(const Scalar& x, unsigned n);

}  // namespace downup
