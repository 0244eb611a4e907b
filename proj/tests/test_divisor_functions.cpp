#include <doctest.h>

#include <numeric>
#include <random>

#include "abundancy/divisor_functions.hpp"

using namespace abundancy;

namespace {

// Oracles by direct divisor scan.
std::uint64_t brute_sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

std::vector<std::uint64_t> brute_primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return ps;
}

// Leibniz rule: D(p) = 1, D(ab) = a D(b) + b D(a).
std::uint64_t brute_derivative(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d * brute_derivative(n / d) + (n / d) * brute_derivative(d);
  }
  return 1;
}

bool brute_deficient(std::uint64_t n) { return brute_sigma(n) < 2 * n; }

}  // namespace

TEST_CASE("documented values") {
  const Factorization f945{{3, 3}, {5, 1}, {7, 1}};
  CHECK(sigma(f945) == 1920);
  CHECK(abundancy_index(f945) == make_rational(128, 63));
  CHECK(abundancy_limit(f945) == make_rational(35, 16));
  CHECK(prime_reciprocal_sum(f945) == make_rational(71, 105));
  CHECK(surplus(f945) == make_rational(3, 16));
  CHECK(classify(f945) == Abundance::Abundant);
  CHECK(is_primitive_nondeficient(f945));

  const Factorization one;
  CHECK(sigma(one) == 1);
  CHECK(abundancy_index(one) == 1);
  CHECK(abundancy_limit(one) == 1);
  CHECK(prime_reciprocal_sum(one) == 0);
  CHECK(arithmetic_derivative(one) == 0);
  CHECK(classify(one) == Abundance::Deficient);

  CHECK(classify(factorize(6)) == Abundance::Perfect);
  CHECK(classify(factorize(28)) == Abundance::Perfect);
  CHECK(sigma_prime_power(Integer(5), 5) == 3906);
  CHECK(surplus(factorize(5)) == make_rational(-3, 4));
  CHECK(radical(factorize(360)) == 30);
}

TEST_CASE("sum of n/p matches the published prefix") {
  const std::vector<long> expected{0, 1, 1, 2, 1, 5, 1, 4, 3, 7, 1, 10};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(sum_n_over_p(factorize(std::uint64_t{i + 1})) == expected[i]);
  }
}

TEST_CASE("agreement with brute-force oracles for n <= 3000") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const Factorization f = factorize(n);
    const std::uint64_t s = brute_sigma(n);
    REQUIRE(sigma(f) == from_u64(s));
    REQUIRE(abundancy_index(f) == make_rational(from_u64(s), from_u64(n)));

    Rational H = 1, T = 0;
    Integer rad = 1;
    for (auto p : brute_primes_of(n)) {
      H *= make_rational(from_u64(p), from_u64(p - 1));
      T += make_rational(Integer(1), from_u64(p));
      rad *= from_u64(p);
    }
    REQUIRE(abundancy_limit(f) == H);
    REQUIRE(prime_reciprocal_sum(f) == T);
    REQUIRE(surplus(f) == H - 2);
    REQUIRE(radical(f) == rad);
    REQUIRE(sum_n_over_p(f) == T * from_u64(n));
    REQUIRE(arithmetic_derivative(f) == from_u64(brute_derivative(n)));

    const Abundance want = s < 2 * n ? Abundance::Deficient : s == 2 * n ? Abundance::Perfect : Abundance::Abundant;
    REQUIRE(classify(f) == want);

    bool primitive = !brute_deficient(n);
    for (std::uint64_t d = 1; primitive && d < n; ++d) {
      if (n % d == 0 && !brute_deficient(d)) primitive = false;
    }
    REQUIRE(is_primitive_nondeficient(f) == primitive);
  }
}

TEST_CASE("h(n^k) increases toward H(n)") {
  const Factorization f{{3, 1}, {5, 1}, {7, 1}};
  Rational prev = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const Rational h = abundancy_index(f.power(k));
    CHECK(h > prev);
    CHECK(h < abundancy_limit(f));
    prev = h;
  }
  CHECK(abundancy_limit(f) - prev < make_rational(1, 10000));
}

TEST_CASE("large factored inputs stay exact") {
  const Factorization big{{3, 40}, {1000003, 3}};
  const Integer n = big.value();
  CHECK(sigma(big) == sigma_prime_power(Integer(3), 40) * sigma_prime_power(Integer(1000003), 3));
  CHECK(abundancy_index(big) == Rational(sigma(big), n));
  CHECK(arithmetic_derivative(big) == n * 40 / 3 + n * 3 / 1000003);
}

TEST_CASE("multiplicativity and the Leibniz identity on random pairs") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t m = 1 + rng() % 200'000;
    const std::uint64_t n = 1 + rng() % 200'000;
    const Factorization fm = factorize(m), fn = factorize(n), fmn = factorize(Integer(from_u64(m) * from_u64(n)));
    REQUIRE(arithmetic_derivative(fmn) ==
            arithmetic_derivative(fm) * from_u64(n) + from_u64(m) * arithmetic_derivative(fn));
    REQUIRE(abundancy_index(fmn) >= abundancy_index(fm));
    if (n == 1) REQUIRE(abundancy_index(fmn) == abundancy_index(fm));
    if (n > 1) REQUIRE(abundancy_index(fmn) > abundancy_index(fm));
    if (std::gcd(m, n) == 1) {
      REQUIRE(sigma(fmn) == sigma(fm) * sigma(fn));
      REQUIRE(abundancy_limit(fmn) == abundancy_limit(fm) * abundancy_limit(fn));
      REQUIRE(prime_reciprocal_sum(fmn) == prime_reciprocal_sum(fm) + prime_reciprocal_sum(fn));
    }
  }
}

TEST_CASE("h <= H with equality only at 1, and nT = D for squarefree n") {
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    const Factorization f = factorize(n);
    if (n == 1) {
      REQUIRE(abundancy_index(f) == abundancy_limit(f));
    } else {
      REQUIRE(abundancy_index(f) < abundancy_limit(f));
    }
    if (radical(f) == from_u64(n)) REQUIRE(sum_n_over_p(f) == arithmetic_derivative(f));
  }
  CHECK(sum_n_over_p(factorize(30)) == 31);
  CHECK(arithmetic_derivative(factorize(6)) == 5);
  CHECK(classify(factorize(105)) == Abundance::Deficient);
  CHECK_FALSE(is_primitive_nondeficient(factorize(1890)));
}
