#include <doctest.h>

#include <cmath>

#include "abundancy/lemmas.hpp"
#include "abundancy/primes.hpp"
#include "abundancy/specials.hpp"

using namespace abundancy;

TEST_CASE("Taylor lemma points") {
  CheckResult r = check_taylor_point(Rational(0));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.precision_bits == 0);
  r = check_taylor_point(make_rational(1, 11));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.lhs.lo_exact() > r.rhs.hi_exact());
  CHECK_THROWS_AS(check_taylor_point(make_rational(1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(check_taylor_point(Rational(-1)), std::invalid_argument);
}

TEST_CASE("Taylor lemma: series sufficient condition") {
  const Rational x = make_rational(Integer(1), Integer(1) << 20);
  CHECK(taylor_series_bound(x) < make_rational(1, 10));
  // Increasing in x, and well under 1/10 across the whole domain.
  CHECK(taylor_series_bound(make_rational(1, 100)) < taylor_series_bound(make_rational(1, 11)));
  CHECK(taylor_series_bound(make_rational(1, 11)) < make_rational(1, 10));
}

TEST_CASE("Taylor lemma: sample and certify modes") {
  LemmaReport s = verify_lemma_taylor(TaylorMode::Sample);
  CHECK(s.verdict == Verdict::Holds);
  CHECK(s.checked == 10001);
  LemmaReport c = verify_lemma_taylor(TaylorMode::Certify);
  CHECK(c.verdict == Verdict::Holds);
  CHECK(c.undecided == 0);
  CHECK(c.checked > 1);
}

TEST_CASE("pi lower bound") {
  CHECK(check_pi_lower_at(19, 8).verdict == Verdict::Holds);
  CheckResult r = check_pi_lower_at(17, 7);
  CHECK(r.verdict == Verdict::Fails);
  CHECK(r.rhs.lo_double() > 7.0002);
  CHECK(r.rhs.hi_double() < 7.0003);
  LemmaReport rep = verify_pi_lower(100'000);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.checked == primes_in(19, 100'000).size());
}

TEST_CASE("nth prime lower bound") {
  LemmaReport rep = verify_nth_prime_lower(50'000);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.checked == 50'000);
  CHECK(rep.fails == 0);
}

TEST_CASE("log bound") {
  CheckResult r = check_log_bound_at(2);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.lhs.lo_double() > 0.6931);
  CHECK(r.rhs.contains(make_rational(89, 128)));
  CHECK(check_log_bound_at(5).verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_log_bound_at(1), std::invalid_argument);
  CHECK(verify_log_bound(100'000).verdict == Verdict::Holds);
}

TEST_CASE("prime-square tail and product") {
  // Oracle: the prime sum of 1/p^2 from 3 is P(2) - 1/4 = 0.20224...
  CheckResult r = check_prime_square_tail_at(3, 10'000'000);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.lhs.lo_double() > 0.2022);
  CHECK(r.lhs.hi_double() < 0.2024);
  CHECK(r.rhs.lo_double() > 0.355);
  CHECK(r.rhs.hi_double() < 0.356);
  CHECK(check_prime_square_tail_at(19, 1'000'000).verdict == Verdict::Holds);
  CHECK(check_prime_square_product_at(3, 1'000'000).verdict == Verdict::Holds);
  CHECK(check_prime_square_product_at(19, 1'000'000).verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_prime_square_tail_at(4, 1000), std::invalid_argument);
  CHECK_THROWS_AS(check_prime_square_tail_at(2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(check_prime_square_product_at(19, 17), std::invalid_argument);
  CHECK_THROWS_AS(verify_prime_square_tail(2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(verify_prime_square_product(100, 50), std::invalid_argument);

  LemmaReport t = verify_prime_square_tail(1000, 1'000'000);
  CHECK(t.verdict == Verdict::Holds);
  CHECK(t.checked == primes_in(3, 1000).size());
  LemmaReport p = verify_prime_square_product(1000, 1'000'000);
  CHECK(p.verdict == Verdict::Holds);
  CHECK(p.checked == t.checked);
}

TEST_CASE("prime-square tail agrees with a double-precision partial sum") {
  // sum over primes in [q, L] plus 1/L; independent of the MPFR path.
  const std::uint64_t L = 200'000;
  auto ps = primes_in(3, L);
  for (std::uint64_t q : {3, 5, 7, 101, 997}) {
    long double s = 1.0L / L;
    for (auto p : ps) {
      if (p >= q) s += 1.0L / (static_cast<long double>(p) * p);
    }
    CheckResult r = check_prime_square_tail_at(q, L);
    CHECK(r.lhs.lo_double() <= static_cast<double>(s) * (1 + 1e-12));
    CHECK(r.lhs.hi_double() >= static_cast<double>(s) * (1 - 1e-12));
  }
}

TEST_CASE("estimate_C") {
  CEstimate c = estimate_C(10);
  CHECK(c.value == 2);
  CHECK(c.attained_at == 6);
  c = estimate_C(1000, true);
  CHECK(c.value == make_rational(9, 16));
  CHECK(c.attained_at == 945);
  CEstimate none = estimate_C(5);
  CHECK(none.attained_at == 0);
}

TEST_CASE("lemma reports turn into records") {
  LemmaReport rep = verify_log_bound(1000);
  BoundCheckRecord r = to_record(rep);
  CHECK(r.bound_id == lemma_id::kLogBound);
  CHECK(r.status == Status::Holds);
  CHECK(r.result.has_value());
}

TEST_CASE("no tricky specials") {
  SpecialCell c5 = special_cell(5);
  CHECK(c5.h_odd == make_rational(3, 2));
  CHECK(c5.h_times_q == make_rational(15, 8));
  SpecialCell c13 = special_cell(13);
  CHECK(c13.h_odd == make_rational(7, 6));
  CHECK(c13.h_times_q == make_rational(91, 72));

  SpecialsReport rep = no_tricky_specials_scan(100'000, false, 4);
  CHECK(rep.ok());
  CHECK(rep.witnesses.empty());
  CHECK(rep.scanned == primes_in(3, 100'000).size());
  CHECK(rep.closest < 2);
  SpecialsReport rep1 = no_tricky_specials_scan(100'000, false, 1);
  CHECK(rep1.closest == rep.closest);
  CHECK(rep1.triggering == rep.triggering);
  SpecialsReport quarter = no_tricky_specials_scan(10'000, true);
  CHECK(quarter.scanned < primes_in(3, 10'000).size());
}
