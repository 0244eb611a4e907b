#pragma once

// Exact arithmetic functions of a factored n. All are total; n = 1 follows
// the empty-sum / empty-product conventions.

#include <string_view>

#include "abundancy/factorization.hpp"
#include "abundancy/integer.hpp"

namespace abundancy {

enum class Abundance { Deficient, Perfect, Abundant };
std::string_view to_string(Abundance a);

/// 1 + p + ... + p^a.
Integer sigma_prime_power(const Integer& p, unsigned long a);

/// Sum of divisors.
Integer sigma(const Factorization& f);

/// h(n) = sigma(n) / n.
Rational abundancy_index(const Factorization& f);

/// H(n) = prod p/(p-1) over distinct primes; the limit of h(n^k).
Rational abundancy_limit(const Factorization& f);

/// T(n) = sum of 1/p over distinct primes.
Rational prime_reciprocal_sum(const Factorization& f);

/// S(n) = H(n) - 2. Negative for some deficient n.
Rational surplus(const Factorization& f);

/// D(n) = n * sum a_i / p_i.
Integer arithmetic_derivative(const Factorization& f);

/// n * T(n) = sum of n/p over distinct primes (OEIS A069359).
Integer sum_n_over_p(const Factorization& f);

Abundance classify(const Factorization& f);

/// Non-deficient with every proper divisor deficient. Checking the maximal
/// proper divisors n/p suffices since non-deficiency is inherited by multiples.
bool is_primitive_nondeficient(const Factorization& f);

/// Product of the distinct primes.
Integer radical(const Factorization& f);

}  // namespace abundancy
