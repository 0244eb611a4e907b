#include "abundancy/divisor_functions.hpp"

namespace abundancy {

std::string_view to_string(Abundance a) {
  switch (a) {
    case Abundance::Deficient: return "deficient";
    case Abundance::Perfect: return "perfect";
    case Abundance::Abundant: return "abundant";
  }
  return "?";
}

Integer sigma_prime_power(const Integer& p, unsigned long a) {
  // (p^(a+1) - 1) / (p - 1), exact.
  Integer num = ipow(p, a + 1) - 1;
  Integer den = p - 1;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

Integer sigma(const Factorization& f) {
  Integer s = 1;
  for (const auto& t : f) s *= sigma_prime_power(t.prime, t.exponent);
  return s;
}

Rational abundancy_index(const Factorization& f) { return make_rational(sigma(f), f.value()); }

Rational abundancy_limit(const Factorization& f) {
  Integer num = 1, den = 1;
  for (const auto& t : f) {
    num *= t.prime;
    den *= t.prime - 1;
  }
  return make_rational(num, den);
}

Rational prime_reciprocal_sum(const Factorization& f) {
  return make_rational(sum_n_over_p(f), f.value());
}

Rational surplus(const Factorization& f) { return abundancy_limit(f) - 2; }

Integer arithmetic_derivative(const Factorization& f) {
  const Integer n = f.value();
  Integer d = 0;
  for (const auto& t : f) d += n / t.prime * t.exponent;
  return d;
}

Integer sum_n_over_p(const Factorization& f) {
  const Integer n = f.value();
  Integer s = 0;
  for (const auto& t : f) s += n / t.prime;
  return s;
}

Abundance classify(const Factorization& f) {
  const int c = cmp(sigma(f), 2 * f.value());
  if (c < 0) return Abundance::Deficient;
  if (c == 0) return Abundance::Perfect;
  return Abundance::Abundant;
}

bool is_primitive_nondeficient(const Factorization& f) {
  if (classify(f) == Abundance::Deficient) return false;
  for (const auto& t : f) {
    if (classify(f.divided_by(t.prime)) != Abundance::Deficient) return false;
  }
  return true;
}

Integer radical(const Factorization& f) {
  Integer r = 1;
  for (const auto& t : f) r *= t.prime;
  return r;
}

}  // namespace abundancy
