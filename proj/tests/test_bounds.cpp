#include <doctest.h>

#include <cmath>

#include "abundancy/bounds.hpp"
#include "abundancy/divisor_functions.hpp"
#include "abundancy/enumerate.hpp"
#include "abundancy/factorization.hpp"

using namespace abundancy;

namespace {

NumberProfile profile(std::uint64_t n) { return NumberProfile::of(factorize(n)); }

bool has(const std::vector<std::string>& v, std::string_view s) {
  for (const auto& x : v) {
    if (x == s) return true;
  }
  return false;
}

double as_double(const Rational& q) { return q.get_d(); }

// Floating-point oracle for the simple T lower bound; used only where the
// margin dwarfs rounding error.
double t_lower_simple_margin(const Factorization& f) {
  const double p1 = f.smallest_prime().get_d();
  double T = 0, H = 1;
  for (const auto& t : f) {
    const double p = t.prime.get_d();
    T += 1 / p;
    H *= p / (p - 1);
  }
  const double S = H - 2;
  return T - (std::log(2.0) - 25 / (64 * p1) + S / 2 - S * S / 4);
}

double dol_margin(const Factorization& f) {
  const double n = f.value().get_d();
  const double p1 = f.smallest_prime().get_d();
  return n * std::log(n) / std::log(p1) / p1 - arithmetic_derivative(f).get_d();
}

}  // namespace

TEST_CASE("T lower bounds: documented examples") {
  BoundCheckRecord r = check_T_lower_simple(profile(945));
  CHECK(r.status == Status::Holds);
  REQUIRE(r.result);
  CHECK(r.result->lhs.contains(make_rational(71, 105)));
  CHECK(r.result->rhs.lo_double() > 0.6478);
  CHECK(r.result->rhs.hi_double() < 0.6480);

  r = check_T_lower_simple(profile(6));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->rhs.lo_double() > 0.747);
  CHECK(r.result->rhs.hi_double() < 0.749);

  r = check_T_lower_simple(profile(12));
  CHECK(r.status == Status::Skipped);
  CHECK(has(r.hypothesis_failures, hypothesis::kPrimitiveNondeficient));
  CHECK_FALSE(r.result.has_value());

  CHECK(check_T_lower_refined(profile(945)).status == Status::Holds);

  // n = 6 has p1 = 2: computed and flagged, not applicable.
  r = check_T_lower_refined(profile(6));
  CHECK(r.status == Status::Skipped);
  CHECK(has(r.flags, "negative-loglog-p1"));
  CHECK(has(r.hypothesis_failures, hypothesis::kP1AtLeast3));
  REQUIRE(r.result);
  CHECK(r.result->verdict == Verdict::Fails);
}

TEST_CASE("T lower refined: smallest odd non-deficient n with p1 = 5") {
  // 5391411025 = 5^2 7 11 13 17 19 23 29 is the least odd abundant number
  // prime to 3 (OEIS A047802); too large to enumerate here, so it is checked
  // directly.
  const Factorization f{{5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {29, 1}};
  CHECK(f.value() == Integer("5391411025"));
  REQUIRE(is_primitive_nondeficient(f));
  // Dropping any prime, or lowering 5^2, makes it deficient.
  CHECK(abundancy_index(f.divided_by(5)) < 2);
  BoundCheckRecord r = check_T_lower_refined(NumberProfile::of(f));
  CHECK(r.status == Status::Holds);
  CHECK(r.flags.empty());
}

TEST_CASE("T upper bound applicability") {
  BoundCheckRecord r = check_T_upper_shape(profile(945));
  CHECK(r.status == Status::Skipped);
  CHECK(has(r.hypothesis_failures, hypothesis::kP1AtLeast11));
  CHECK(has(r.hypothesis_failures, hypothesis::kOneOddExponent));
  CHECK(r.result.has_value());

  // 3^2 5 7^2 has one odd exponent but p1 = 3.
  r = check_T_upper_shape(NumberProfile::of(Factorization{{3, 2}, {5, 1}, {7, 2}}));
  CHECK(r.status == Status::Skipped);
  CHECK(has(r.hypothesis_failures, hypothesis::kP1AtLeast11));
  CHECK_FALSE(has(r.hypothesis_failures, hypothesis::kOneOddExponent));
}

TEST_CASE("H prelude and the zeta-3 ratio form") {
  // 45: H = 15/8, h = 26/15, rhs = 169/90.
  NumberProfile p45 = profile(45);
  BoundCheckRecord r = check_H_prelude(p45);
  CHECK(r.status == Status::Holds);
  REQUIRE(r.result);
  CHECK(r.result->precision_bits == 0);
  CHECK(r.result->rhs.contains(make_rational(169, 90)));
  CHECK(r.result->lhs.contains(make_rational(15, 8)));

  CHECK(check_H_prelude(profile(945)).status == Status::Skipped);
  CHECK(has(check_H_prelude(profile(945)).hypothesis_failures, hypothesis::kOneOddExponent));

  r = check_H_prelude(NumberProfile::of(Factorization{{3, 2}, {5, 3}}));
  CHECK(r.applicable());
  CHECK(r.result.has_value());

  // A single prime has H/h = p^2/(p^2-1) > 1 + 3/(4p^2): the lemma fails here.
  CHECK(check_H_prelude(profile(5)).status == Status::Fails);

  CHECK(check_H_over_h_ratio(p45).status == Status::Holds);
  r = check_H_over_h_ratio(profile(5));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->lhs.contains(make_rational(25, 24)));
  CHECK(r.result->rhs.contains(make_rational(25, 24)));
  CHECK(check_H_over_h_ratio(profile(9)).status == Status::Skipped);
  CHECK(check_H_over_h_ratio(profile(12)).status == Status::Skipped);
}

TEST_CASE("H prelude exact oracle on small shaped n") {
  for (std::uint64_t n = 3; n < 5000; n += 2) {
    const NumberProfile p = profile(n);
    const BoundCheckRecord r = check_H_prelude(p);
    if (!r.applicable()) continue;
    const Rational H = abundancy_limit(p.f), h = abundancy_index(p.f);
    const Rational p1 = Rational(p.f.smallest_prime());
    const bool expected = H <= h * (1 + Rational(3) / (4 * p1 * p1));
    REQUIRE((r.status == Status::Holds) == expected);
    REQUIRE(check_H_over_h_ratio(p).status == Status::Holds);
  }
}

TEST_CASE("generalized Puchta") {
  BoundCheckRecord r = check_generalized_puchta(profile(945), make_rational(3, 16));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->witness == "5^2");
  CHECK(r.result->rhs.contains(make_rational(256, 3)));
  CHECK(r.input == "945 alpha=3/16");

  r = check_generalized_puchta(profile(945), make_rational(1, 2));
  CHECK(r.status == Status::Skipped);
  CHECK(has(r.hypothesis_failures, hypothesis::kSurplusAtLeastAlpha));

  r = check_generalized_puchta(profile(6), make_rational(1, 2));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->rhs.contains(24));
  CHECK(r.result->lhs.contains(4));

  CHECK(has(check_generalized_puchta(profile(6), Rational(1)).hypothesis_failures, hypothesis::kAlphaRange));
  CHECK(check_generalized_puchta(profile(12), make_rational(1, 4)).status == Status::Skipped);
}

TEST_CASE("Servais") {
  CHECK(check_servais(profile(6)).status == Status::Holds);
  CHECK(check_servais(profile(945)).status == Status::Holds);
  CHECK(check_servais(profile(12)).status == Status::Holds);
  CHECK(check_servais(profile(15)).status == Status::Skipped);
}

TEST_CASE("largest-prime bounds") {
  auto rs = check_largest_prime_bounds(profile(9765));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].bound_id == bound_id::kLargestCube);
  CHECK(rs[0].status == Status::Fails);
  CHECK(rs[0].empirical);
  CHECK_FALSE(rs[0].violation());
  CHECK(rs[0].result->lhs.contains(29791));
  CHECK(rs[0].result->rhs.contains(29295));
  CHECK(rs[1].status == Status::Holds);
  CHECK(rs[1].result->lhs.contains(961));
  CHECK(rs[1].result->rhs.contains(19530));

  // n = 6: only the theorem holds. 27 >= 18, 32 >= 12 and 1296 >= 216 make
  // the three empirical bounds fail, and none of them counts as a violation.
  rs = check_largest_prime_bounds(profile(6));
  CHECK(rs[0].status == Status::Fails);
  CHECK(rs[1].status == Status::Holds);
  CHECK(rs[2].status == Status::Fails);
  CHECK(rs[3].status == Status::Fails);
  for (const auto& r : rs) CHECK_FALSE(r.violation());
  for (const auto& r : check_largest_prime_bounds(profile(12))) CHECK(r.status == Status::Skipped);
}

TEST_CASE("arithmetic-derivative bound") {
  BoundCheckRecord r = check_dol(profile(6));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->rhs.lo_double() > 7.75);
  CHECK(r.result->rhs.hi_double() < 7.76);
  for (std::uint64_t p : {2, 3, 7, 101, 65537}) {
    r = check_dol(profile(p));
    CHECK(r.status == Status::Holds);
    CHECK(r.result->precision_bits == 0);
  }
  r = check_dol(profile(945));
  CHECK(r.status == Status::Holds);
  CHECK(r.result->lhs.contains(1269));
  CHECK(r.result->rhs.lo_double() > 1963);
  CHECK(r.result->rhs.hi_double() < 1965);
  CHECK(check_dol(NumberProfile::of(Factorization{})).status == Status::Skipped);
}

TEST_CASE("verdicts agree with the floating-point oracle where margins are clear") {
  int compared = 0;
  for (const auto& f : enumerate_primitive_nondeficient(400'000)) {
    const NumberProfile p = NumberProfile::of(f, true);
    const double m1 = t_lower_simple_margin(f);
    if (std::abs(m1) > 1e-9) {
      REQUIRE((check_T_lower_simple(p).status == Status::Holds) == (m1 >= 0));
      ++compared;
    }
    const double m2 = dol_margin(f);
    if (std::abs(m2) > 1e-6 * f.value().get_d()) REQUIRE((check_dol(p).status == Status::Holds) == (m2 >= 0));
  }
  CHECK(compared > 900);
}

TEST_CASE("sweeps: ordering, summaries and job invariance") {
  std::vector<std::string> a, b;
  SweepOptions o;
  o.limit = 20'000;
  o.jobs = 1;
  SweepSummary s1 = sweep_bounds(Suite::PrimitiveNondeficient, o, [&](const BoundCheckRecord& r) {
    a.push_back(r.bound_id + " " + r.input + " " + std::string(to_string(r.status)));
  });
  o.jobs = 6;
  SweepSummary s6 = sweep_bounds(Suite::PrimitiveNondeficient, o, [&](const BoundCheckRecord& r) {
    b.push_back(r.bound_id + " " + r.input + " " + std::string(to_string(r.status)));
  });
  CHECK(a == b);
  CHECK(s1.records == a.size());
  CHECK(s1.violations == 0);
  CHECK(s1.undecided == 0);
  CHECK(s1.records == s6.records);
  REQUIRE(a.size() >= 7);
  CHECK(a[0] == "prop.T-lower.simple 6 Holds");

  std::uint64_t shaped = 0;
  o.limit = 3000;
  SweepSummary shape = sweep_bounds(Suite::Shape, o, [&](const BoundCheckRecord& r) {
    CHECK(r.applicable());
    ++shaped;
  });
  CHECK(shape.records == shaped);
  CHECK(shape.undecided == 0);

  CHECK_THROWS_AS(sweep_bounds(Suite::Lemmas, o, [](const BoundCheckRecord&) {}), std::invalid_argument);
  CHECK(parse_suite("pnd") == Suite::PrimitiveNondeficient);
  CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
}
