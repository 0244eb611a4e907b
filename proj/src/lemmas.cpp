#include "abundancy/lemmas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "abundancy/divisor_functions.hpp"
#include "abundancy/enumerate.hpp"
#include "abundancy/parallel.hpp"

namespace abundancy {

namespace {

constexpr long kSumPrecision = 128;
constexpr std::size_t kChunk = 4096;

// Lower bound on the separation in the direction the relation asks for.
double margin(const CheckResult& r) {
  switch (r.relation) {
    case Relation::Less:
    case Relation::LessEqual: return r.rhs.lo_double() - r.lhs.hi_double();
    case Relation::Greater:
    case Relation::GreaterEqual: return r.lhs.lo_double() - r.rhs.hi_double();
  }
  return 0;
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Holds: return Status::Holds;
    case Verdict::Fails: return Status::Fails;
    case Verdict::Undecided: return Status::Undecided;
  }
  return Status::Undecided;
}

// Runs check(i) for i in [0, count) in parallel chunks and folds the results
// in index order.
template <typename Check>
void sweep_into(LemmaReport& report, std::size_t count, unsigned jobs, Check check) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  auto parts = ordered_map(chunks, jobs, [&](std::size_t c) {
    LemmaReport part;
    const std::size_t end = std::min(count, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      auto [result, input] = check(i);
      part.add(result, input);
    }
    return part;
  });
  for (const auto& part : parts) {
    report.checked += part.checked;
    report.holds += part.holds;
    report.fails += part.fails;
    report.undecided += part.undecided;
    if (part.tightest) report.add_candidate(*part.tightest, part.tightest_input);
  }
}

// Sum of 1/p^2 over primes in [lo, hi], outward rounded.
Interval reciprocal_square_sum(std::uint64_t lo, std::uint64_t hi) {
  Interval acc = Interval::empty_at(kSumPrecision);
  mpfr_set_zero(acc.lo_mut(), 1);
  mpfr_set_zero(acc.hi_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, kSumPrecision);
  PrimeStream s(lo, hi);
  while (const std::uint64_t p = s.next()) {
    const unsigned long sq = static_cast<unsigned long>(p * p);
    mpfr_set_ui(t, sq, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDD);
    mpfr_add(acc.lo_mut(), acc.lo(), t, MPFR_RNDD);
    mpfr_set_ui(t, sq, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDU);
    mpfr_add(acc.hi_mut(), acc.hi(), t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return acc;
}

// Sum of log(1 + 1/(p^2 - 1)) over primes in [lo, hi], outward rounded.
Interval log_factor_sum(std::uint64_t lo, std::uint64_t hi) {
  Interval acc = Interval::empty_at(kSumPrecision);
  mpfr_set_zero(acc.lo_mut(), 1);
  mpfr_set_zero(acc.hi_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, kSumPrecision);
  PrimeStream s(lo, hi);
  while (const std::uint64_t p = s.next()) {
    const unsigned long d = static_cast<unsigned long>(p * p - 1);
    mpfr_set_ui(t, d, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDD);
    mpfr_log1p(t, t, MPFR_RNDD);
    mpfr_add(acc.lo_mut(), acc.lo(), t, MPFR_RNDD);
    mpfr_set_ui(t, d, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDU);
    mpfr_log1p(t, t, MPFR_RNDU);
    mpfr_add(acc.hi_mut(), acc.hi(), t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return acc;
}

// (1/(q log q))(1 + 2 log log q / log q).
RealExpr square_tail_bound(std::uint64_t q) {
  const RealExpr L = log(RealExpr(from_u64(q)));
  return RealExpr(1L) / (RealExpr(from_u64(q)) * L) * (RealExpr(1L) + RealExpr(2L) * log(L) / L);
}

RealExpr square_product_bound(std::uint64_t q) {
  const Integer q3 = ipow(from_u64(q), 3);
  return square_tail_bound(q) + RealExpr(make_rational(Integer(4), q3));
}

// lhs is a fixed enclosure; the rhs is refined until separated or capped.
CheckResult compare_enclosure(const Interval& lhs, Relation rel, const RealExpr& rhs, long cap, std::string witness) {
  CheckResult r;
  r.relation = rel;
  r.lhs = lhs;
  r.witness = std::move(witness);
  for (long bits = kSumPrecision;; bits *= 2) {
    r.rhs = eval_interval(rhs, bits);
    r.precision_bits = bits;
    r.verdict = decide(r.lhs, rel, r.rhs);
    if (r.verdict != Verdict::Undecided || bits * 2 > cap) break;
  }
  return r;
}

Interval plus_upper(const Interval& x, const Rational& extra) {
  return x + span_of(Rational(0), extra, kSumPrecision);
}

void require_odd_prime(std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime_u64(q)) {
    throw std::invalid_argument("q must be an odd prime, got " + std::to_string(q));
  }
}

// Sums over primes in (lo, hi] split into parallel chunks, added in order.
template <typename Sum>
Interval chunked_sum(std::uint64_t lo, std::uint64_t hi, unsigned jobs, Sum sum) {
  Interval total(Rational(0), kSumPrecision);
  if (hi <= lo) return total;
  const auto ranges = split_range(lo + 1, hi, 10'000'000);
  auto parts = ordered_map(ranges.size(), jobs, [&](std::size_t i) { return sum(ranges[i].lo, ranges[i].hi); });
  for (const auto& part : parts) total = total + part;
  return total;
}

template <typename Sum, typename Bound>
LemmaReport prime_sum_sweep(std::string_view id, std::uint64_t q_limit, std::uint64_t cutoff, const Rational& tail,
                            const LemmaOptions& o, Sum sum, Bound bound) {
  if (q_limit < 3) throw std::invalid_argument("q_limit must be >= 3");
  if (cutoff < q_limit) throw std::invalid_argument("cutoff L must be >= q_limit");
  LemmaReport report;
  report.lemma_id = std::string(id);
  report.domain = "odd primes q <= " + std::to_string(q_limit) + ", cutoff L = " + std::to_string(cutoff);
  Interval suffix = chunked_sum(q_limit, cutoff, o.jobs, sum);
  const auto small = primes_in(3, q_limit);
  for (auto it = small.rbegin(); it != small.rend(); ++it) {
    suffix = suffix + sum(*it, *it);
    const std::string input = "q=" + std::to_string(*it);
    report.add(compare_enclosure(plus_upper(suffix, tail), Relation::Less, bound(*it), o.precision_cap, input), input);
  }
  report.finish();
  return report;
}

}  // namespace

void LemmaReport::add(const CheckResult& r, const std::string& input) {
  ++checked;
  switch (r.verdict) {
    case Verdict::Holds: ++holds; break;
    case Verdict::Fails: ++fails; break;
    case Verdict::Undecided: ++undecided; break;
  }
  add_candidate(r, input);
}

void LemmaReport::add_candidate(const CheckResult& r, const std::string& input) {
  // A failure always wins; otherwise keep the smallest margin.
  const bool r_bad = r.verdict != Verdict::Holds;
  const bool cur_bad = tightest && tightest->verdict != Verdict::Holds;
  if (cur_bad) return;
  if (!tightest || r_bad || margin(r) < margin(*tightest)) {
    tightest = r;
    tightest_input = input;
  }
}

void LemmaReport::finish() {
  if (fails > 0) {
    verdict = Verdict::Fails;
  } else if (undecided > 0 || checked == 0) {
    verdict = Verdict::Undecided;
  } else {
    verdict = Verdict::Holds;
  }
}

BoundCheckRecord to_record(const LemmaReport& report) {
  BoundCheckRecord r;
  r.bound_id = report.lemma_id;
  r.input = report.domain;
  r.status = status_of(report.verdict);
  r.result = report.tightest;
  r.flags.push_back("instances=" + std::to_string(report.checked));
  if (!report.tightest_input.empty()) r.flags.push_back("tightest=" + report.tightest_input);
  if (!report.detail.empty()) r.flags.push_back(report.detail);
  return r;
}

Rational taylor_series_bound(const Rational& x) {
  const Rational y = x + Rational(2) * x * x / 5;
  const Rational g = (1 + Rational(2) * x / 5) * (1 + Rational(2) * x / 5);
  return Rational(2) * x / 5 + Rational(2) * x * x / 25 + g * y / 6 + g * y * y / 24 / (1 - y / 5);
}

CheckResult check_taylor_point(const Rational& x, long precision_cap) {
  if (x < 0 || x > make_rational(1, 11)) throw std::invalid_argument("x must lie in [0, 1/11]");
  const Rational lhs = 1 + x + x * x;
  const RealExpr rhs = exp(RealExpr(x + Rational(2) * x * x / 5));
  return compare_certified(RealExpr(lhs), Relation::GreaterEqual, rhs, precision_cap, "x=" + to_string(x));
}

namespace {

// log(1 + x + x^2) - x - 2x^2/5 on [a, b] in mean-value form around the
// midpoint; the derivative is (1 + 2x)/(1 + x + x^2) - 1 - 4x/5.
Interval taylor_gap(const Rational& a, const Rational& b, mpfr_prec_t bits) {
  const Rational m = (a + b) / 2;
  const Interval fm = log(Interval(1 + m + m * m, bits)) - Interval(m + Rational(2) * m * m / 5, bits);
  const Interval X = span_of(a, b, bits);
  const Interval one(Rational(1), bits);
  const Interval two(Rational(2), bits);
  const Interval deriv = (one + two * X) / (one + X + X * X) - one - Interval(make_rational(4, 5), bits) * X;
  return fm + deriv * (X - Interval(m, bits));
}

struct BisectionOutcome {
  std::uint64_t cells = 0;
  int max_depth = 0;
  // Enclosure on the leftmost proven cell, where the gap is smallest.
  std::optional<Interval> leftmost;
  std::optional<std::pair<Rational, Rational>> failing;
};

void bisect(const Rational& a, const Rational& b, int depth, int budget, BisectionOutcome& out) {
  if (out.failing) return;
  const Interval g = taylor_gap(a, b, kSumPrecision);
  if (mpfr_sgn(g.lo()) > 0) {
    ++out.cells;
    if (!out.leftmost) out.leftmost = g;
    out.max_depth = std::max(out.max_depth, depth);
    return;
  }
  if (depth >= budget) {
    out.failing = std::make_pair(a, b);
    return;
  }
  const Rational m = (a + b) / 2;
  bisect(a, m, depth + 1, budget, out);
  bisect(m, b, depth + 1, budget, out);
}

}  // namespace

LemmaReport verify_lemma_taylor(TaylorMode mode, const LemmaOptions& o) {
  LemmaReport report;
  report.lemma_id = std::string(lemma_id::kTaylor);
  report.domain = "0 <= x <= 1/11";
  const Rational top = make_rational(1, 11);
  if (mode == TaylorMode::Sample) {
    constexpr std::size_t kPoints = 10'000;
    sweep_into(report, kPoints + 1, o.jobs, [&](std::size_t i) {
      const Rational x = top * make_rational(Integer(static_cast<unsigned long>(i)), Integer(kPoints));
      return std::make_pair(check_taylor_point(x, o.precision_cap), "x=" + to_string(x));
    });
    report.detail = "mode=sample";
    report.finish();
    return report;
  }

  // [0, 2^-20]: the series condition is increasing in x, so its value at
  // the right endpoint covers the whole cell.
  const Rational left = make_rational(Integer(1), Integer(1) << 20);
  const Rational tenth = make_rational(1, 10);
  const CheckResult series = compare_exact(taylor_series_bound(left), Relation::Less, tenth, "series at x=2^-20");
  report.add(series, "x in (0, 2^-20]");
  // x = 0 is the equality case.
  report.add(check_taylor_point(Rational(0), o.precision_cap), "x=0");

  BisectionOutcome outcome;
  bisect(left, top, 0, 60, outcome);
  CheckResult cells;
  cells.relation = Relation::Greater;
  cells.precision_bits = kSumPrecision;
  if (outcome.leftmost) cells.lhs = *outcome.leftmost;
  cells.rhs = Interval(Rational(0), kSumPrecision);
  if (outcome.failing) {
    cells.verdict = Verdict::Undecided;
    cells.witness = "depth budget exhausted on [" + to_string(outcome.failing->first) + ", " +
                    to_string(outcome.failing->second) + "]";
  } else {
    cells.verdict = Verdict::Holds;
    cells.witness = std::to_string(outcome.cells) + " cells, max depth " + std::to_string(outcome.max_depth);
  }
  report.add(cells, "x in [2^-20, 1/11]");
  if (cells.holds() && outcome.cells > 1) {
    // Count one instance per proven cell.
    report.checked += outcome.cells - 1;
    report.holds += outcome.cells - 1;
  }
  const Rational whole = taylor_series_bound(top);
  report.detail = "mode=certify; " + cells.witness + "; series bound at 1/11 = " +
                  std::to_string(whole.get_d()) + (whole < tenth ? " < 1/10" : " >= 1/10");
  report.finish();
  return report;
}

CheckResult check_pi_lower_at(std::uint64_t p, std::uint64_t pi_of_p, long precision_cap) {
  const RealExpr P(from_u64(p));
  return compare_certified(RealExpr(from_u64(pi_of_p)), Relation::GreaterEqual, P / log(P) + RealExpr(1L),
                           precision_cap, "p=" + std::to_string(p));
}

LemmaReport verify_pi_lower(std::uint64_t limit, const LemmaOptions& o) {
  LemmaReport report;
  report.lemma_id = std::string(lemma_id::kPiLower);
  report.domain = "primes 19 <= p <= " + std::to_string(limit);
  const auto primes = primes_in(2, limit);
  std::size_t first = 0;
  while (first < primes.size() && primes[first] < 19) ++first;
  sweep_into(report, primes.size() - first, o.jobs, [&](std::size_t i) {
    const std::uint64_t p = primes[first + i];
    return std::make_pair(check_pi_lower_at(p, first + i + 1, o.precision_cap), "p=" + std::to_string(p));
  });
  report.finish();
  return report;
}

LemmaReport verify_nth_prime_lower(std::uint64_t limit, const LemmaOptions& o) {
  LemmaReport report;
  report.lemma_id = std::string(lemma_id::kNthPrime);
  report.domain = "1 <= j <= " + std::to_string(limit);
  // P_j < j(log j + log log j) for j >= 6.
  const double j = static_cast<double>(std::max<std::uint64_t>(limit, 6));
  const auto bound = static_cast<std::uint64_t>(j * (std::log(j) + std::log(std::log(j)))) + 100;
  auto primes = primes_in(2, bound);
  if (primes.size() < limit) throw std::logic_error("prime bound too small");
  sweep_into(report, limit, o.jobs, [&](std::size_t i) {
    const RealExpr J(from_u64(i + 1));
    CheckResult r = compare_certified(RealExpr(from_u64(primes[i])), Relation::GreaterEqual, J * log(J),
                                      o.precision_cap, "j=" + std::to_string(i + 1));
    return std::make_pair(std::move(r), "j=" + std::to_string(i + 1));
  });
  report.finish();
  return report;
}

CheckResult check_log_bound_at(std::uint64_t x, long precision_cap) {
  if (x < 2) throw std::invalid_argument("x must be an integer >= 2");
  const Integer X = from_u64(x);
  const RealExpr lhs = log(RealExpr(make_rational(X, X - 1)));
  const Rational rhs = make_rational(Integer(1), X) + make_rational(Integer(25), 32 * X * X);
  return compare_certified(lhs, Relation::LessEqual, RealExpr(rhs), precision_cap, "x=" + std::to_string(x));
}

LemmaReport verify_log_bound(std::uint64_t x_limit, const LemmaOptions& o) {
  LemmaReport report;
  report.lemma_id = std::string(lemma_id::kLogBound);
  report.domain = "2 <= x <= " + std::to_string(x_limit);
  const std::size_t count = x_limit >= 2 ? x_limit - 1 : 0;
  sweep_into(report, count, o.jobs, [&](std::size_t i) {
    return std::make_pair(check_log_bound_at(i + 2, o.precision_cap), "x=" + std::to_string(i + 2));
  });
  report.finish();
  return report;
}

LemmaReport verify_prime_square_tail(std::uint64_t q_limit, std::uint64_t cutoff, const LemmaOptions& o) {
  return prime_sum_sweep(lemma_id::kSquareTail, q_limit, cutoff, make_rational(Integer(1), from_u64(cutoff)), o,
                         reciprocal_square_sum, square_tail_bound);
}

LemmaReport verify_prime_square_product(std::uint64_t q_limit, std::uint64_t cutoff, const LemmaOptions& o) {
  return prime_sum_sweep(lemma_id::kSquareProduct, q_limit, cutoff, make_rational(Integer(2), from_u64(cutoff)), o,
                         log_factor_sum, square_product_bound);
}

CheckResult check_prime_square_tail_at(std::uint64_t q, std::uint64_t cutoff) {
  require_odd_prime(q);
  if (cutoff < q) throw std::invalid_argument("cutoff L must be >= q");
  const Interval sum = plus_upper(reciprocal_square_sum(q, cutoff), make_rational(Integer(1), from_u64(cutoff)));
  return compare_enclosure(sum, Relation::Less, square_tail_bound(q), kDefaultPrecisionCap, "q=" + std::to_string(q));
}

CheckResult check_prime_square_product_at(std::uint64_t q, std::uint64_t cutoff) {
  require_odd_prime(q);
  if (cutoff < q) throw std::invalid_argument("cutoff L must be >= q");
  const Interval sum = plus_upper(log_factor_sum(q, cutoff), make_rational(Integer(2), from_u64(cutoff)));
  return compare_enclosure(sum, Relation::Less, square_product_bound(q), kDefaultPrecisionCap,
                           "q=" + std::to_string(q));
}

CEstimate estimate_C(std::uint64_t limit, bool odd_only, unsigned jobs) {
  CEstimate best;
  EnumerateOptions eo;
  eo.odd_only = odd_only;
  eo.jobs = jobs;
  bool any = false;
  for_each_primitive_nondeficient(limit, eo, [&](const Factorization& f) {
    const Rational c = surplus(f) * f.smallest_prime();
    if (!any || c > best.value) {
      best.value = c;
      best.attained_at = to_u64(f.value());
      any = true;
    }
  });
  return best;
}

}  // namespace abundancy
