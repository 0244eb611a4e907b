#pragma once

// Exact integer and rational types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace abundancy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses a base-10 integer with optional leading '-'. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool fits_u64(const Integer& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t v);

/// base^exp, exact.
Integer ipow(const Integer& base, unsigned long exp);

/// Largest odd divisor of n (n > 0).
Integer odd_part(const Integer& n);

/// Largest k with p^k | n (n != 0, p >= 2).
unsigned long valuation(const Integer& n, const Integer& p);

}  // namespace abundancy
