#include <doctest.h>

#include <random>

#include "abundancy/factorization.hpp"
#include "abundancy/primes.hpp"

using namespace abundancy;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Independent oracle: plain trial division over all d.
std::vector<std::pair<std::uint64_t, unsigned long>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned long>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Factorization from_pairs(const std::vector<std::pair<std::uint64_t, unsigned long>>& v) {
  std::vector<PrimePower> pp;
  for (auto [p, e] : v) pp.push_back({from_u64(p), e});
  return Factorization(std::move(pp));
}

}  // namespace

TEST_CASE("factorize: documented examples") {
  CHECK(factorize(1).empty());
  CHECK(factorize(1).value() == 1);
  CHECK(factorize(9765) == Factorization{{3, 2}, {5, 1}, {7, 1}, {31, 1}});

  const Factorization descartes = factorize(Integer("198585576189"));
  CHECK(descartes == from_pairs(trial_factor(198585576189ULL)));
  CHECK(descartes == Factorization{{3, 2}, {7, 2}, {11, 2}, {13, 2}, {19, 2}, {61, 1}});
  CHECK(factorize(22021) == Factorization{{19, 2}, {61, 1}});
}

TEST_CASE("factorize rejects zero") {
  CHECK_THROWS_AS(factorize(Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(factorize_partial(Integer(-5)), std::invalid_argument);
}

TEST_CASE("factorize round trip for every n <= 10^5") {
  SpfTable table(100'000);
  for (std::uint32_t n = 1; n <= 100'000; ++n) {
    const Factorization f = factorize(std::uint64_t{n});
    REQUIRE(f.value() == n);
    REQUIRE(f == factorize(n, table));
    for (std::size_t i = 1; i < f.size(); ++i) REQUIRE(f[i - 1].prime < f[i].prime);
  }
}

TEST_CASE("factorize round trip on random 64-bit values") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() | 1;
    const Factorization f = factorize(n);
    REQUIRE(f.value() == from_u64(n));
    for (const auto& t : f) REQUIRE(is_prime(t.prime).prime);
    REQUIRE(factorize(f.value()) == f);
  }
}

TEST_CASE("factorize_partial: budget leaves an explicit cofactor") {
  // Product of two 100-bit primes; a tiny budget cannot split it.
  Integer p, q;
  mpz_nextprime(p.get_mpz_t(), Integer("1267650600228229401496703205653").get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), Integer("1267650600228229401496703206000").get_mpz_t());
  const Integer n = p * q * 3 * 3 * 7;
  FactorOptions opts;
  opts.rho_budget = 1000;
  const PartialFactorization pf = factorize_partial(n, opts);
  CHECK_FALSE(pf.complete());
  CHECK(pf.cofactor == p * q);
  CHECK(pf.known == Factorization{{3, 2}, {7, 1}});
  CHECK(pf.value() == n);
  CHECK(pf.trial_floor == 1'000'000);
  CHECK_THROWS_AS(factorize(n, opts), std::runtime_error);
}

TEST_CASE("factorize splits large semiprimes within budget") {
  // 30-bit and 35-bit factors, beyond trial division.
  Integer p, q;
  mpz_nextprime(p.get_mpz_t(), Integer(Integer(1) << 30).get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), Integer(Integer(1) << 35).get_mpz_t());
  const Integer n = p * q * p;
  const Factorization f = factorize(n);
  CHECK(f.value() == n);
  CHECK(f.exponent_of(p) == 2);
  CHECK(f.exponent_of(q) == 1);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(Integer(2)).prime);
  CHECK_FALSE(is_prime(Integer(22021)).prime);
  CHECK(is_prime(Integer(13)).prime);
  CHECK_FALSE(is_prime(Integer(0)).prime);
  CHECK_FALSE(is_prime(Integer(1)).prime);
  CHECK(is_prime(Integer(13)).certainty == Certainty::Proven);

  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime_u64(3215031751ULL));
  CHECK_FALSE(is_prime_u64(3825123056546413051ULL));
  CHECK(is_prime_u64(18446744073709551557ULL));

  const Integer big = (Integer(1) << 127) - 1;  // Mersenne prime
  const auto r = is_prime(big);
  CHECK(r.prime);
  CHECK(r.certainty == Certainty::Probable);
}

TEST_CASE("is_prime agrees with trial division for n <= 10^6") {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) REQUIRE(is_prime_u64(n) == trial_division_prime(n));
}

TEST_CASE("primes_in") {
  CHECK(primes_in(2, 11) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK(primes_in(2, 19).size() == 8);
  CHECK(primes_in(20, 22).empty());
  CHECK(primes_in(30, 20).empty());

  // Tiny segments cross many boundaries.
  std::vector<std::uint64_t> streamed;
  PrimeStream s(1000, 5000, 64);
  while (auto p = s.next()) streamed.push_back(p);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 1000; n <= 5000; ++n) {
    if (trial_division_prime(n)) expected.push_back(n);
  }
  CHECK(streamed == expected);
  CHECK(primes_in(2, 1'000'000).size() == 78498);
}

TEST_CASE("rational stays reduced") {
  Rational a = make_rational(6, 4);
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 2);
  Rational b = a * make_rational(4, 9) + make_rational(1, 3);
  CHECK(b == 1);
  CHECK(b.get_den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Rational x = make_rational(Integer(long(rng() % 2001) - 1000), Integer(long(rng() % 999) + 1));
    Rational y = make_rational(Integer(long(rng() % 2001) - 1000), Integer(long(rng() % 999) + 1));
    Rational z = make_rational(Integer(long(rng() % 2001) - 1000), Integer(long(rng() % 999) + 1));
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE(x * y == y * x);
    Rational w = x * y - z;
    Integer g;
    mpz_gcd(g.get_mpz_t(), w.get_num().get_mpz_t(), w.get_den().get_mpz_t());
    REQUIRE(g == 1);
    REQUIRE(w.get_den() > 0);
  }
}

TEST_CASE("Factorization validation") {
  CHECK_THROWS_AS((Factorization{{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((Factorization{{5, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((Factorization{{3, 0}}), std::invalid_argument);
  const Factorization f{{3, 3}, {5, 1}, {7, 1}};
  CHECK(f.to_string() == "3^3*5*7");
  CHECK(f.value() == 945);
  CHECK(f.divided_by(Integer(5)).value() == 189);
  CHECK(f.power(2).value() == 945 * 945);
  CHECK(odd_part(Integer(14)) == 7);
  CHECK(odd_part(Integer(1953)) == 1953);
  CHECK(valuation(Integer(3906), Integer(3)) == 2);
}
