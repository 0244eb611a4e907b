#include "abundancy/bounds.hpp"

#include <stdexcept>

#include "abundancy/divisor_functions.hpp"
#include "abundancy/enumerate.hpp"
#include "abundancy/parallel.hpp"

namespace abundancy {

namespace {

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Holds: return Status::Holds;
    case Verdict::Fails: return Status::Fails;
    case Verdict::Undecided: return Status::Undecided;
  }
  return Status::Undecided;
}

BoundCheckRecord make_record(std::string_view id, const NumberProfile& p) {
  BoundCheckRecord r;
  r.bound_id = std::string(id);
  r.input = p.n.get_str();
  return r;
}

void settle(BoundCheckRecord& r, CheckResult result) {
  r.status = r.applicable() ? status_of(result.verdict) : Status::Skipped;
  r.result = std::move(result);
}

void skip(BoundCheckRecord& r, std::string_view why) { r.hypothesis_failures.emplace_back(why); }

// S/2 - S^2/4, the quadratic part shared by both T lower bounds.
Rational surplus_quadratic(const Rational& S) { return S / 2 - S * S / 4; }

bool shape_ok(const Factorization& f) {
  return !f.empty() && f.smallest_prime() >= 3 && single_odd_exponent(f).has_value();
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Undecided: return "Undecided";
    case Status::Skipped: return "Skipped";
  }
  return "?";
}

NumberProfile NumberProfile::of(const Factorization& f) { return of(f, is_primitive_nondeficient(f)); }

NumberProfile NumberProfile::of(const Factorization& f, bool primitive_nondeficient) {
  NumberProfile p;
  p.f = f;
  p.n = f.value();
  p.h = abundancy_index(f);
  p.H = abundancy_limit(f);
  p.T = prime_reciprocal_sum(f);
  p.S = p.H - 2;
  p.nondeficient = p.h >= 2;
  p.primitive_nondeficient = primitive_nondeficient;
  return p;
}

std::optional<std::size_t> single_odd_exponent(const Factorization& f) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].exponent % 2 == 1) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

BoundCheckRecord check_T_lower_simple(const NumberProfile& p, const CheckOptions& o) {
  BoundCheckRecord r = make_record(bound_id::kTLowerSimple, p);
  if (!p.primitive_nondeficient) {
    skip(r, hypothesis::kPrimitiveNondeficient);
    return r;
  }
  const Integer& p1 = p.f.smallest_prime();
  const Rational c = surplus_quadratic(p.S) - make_rational(Integer(25), Integer(64 * p1));
  settle(r, compare_certified(RealExpr(p.T), Relation::GreaterEqual, log(RealExpr(2L)) + RealExpr(c), o.precision_cap));
  return r;
}

BoundCheckRecord check_T_lower_refined(const NumberProfile& p, const CheckOptions& o) {
  BoundCheckRecord r = make_record(bound_id::kTLowerRefined, p);
  if (!p.primitive_nondeficient) {
    skip(r, hypothesis::kPrimitiveNondeficient);
    return r;
  }
  const Integer& p1 = p.f.smallest_prime();
  if (p1 < 3) {
    // log log 2 < 0 flips the correction term; computed for the report only.
    skip(r, hypothesis::kP1AtLeast3);
    r.flags.emplace_back("negative-loglog-p1");
  }
  const RealExpr L = log(RealExpr(p1));
  const RealExpr correction = RealExpr(make_rational(Integer(25), Integer(32 * p1))) / L * (RealExpr(1L) + RealExpr(2L) * log(L) / L);
  const RealExpr rhs = log(RealExpr(2L)) - correction + RealExpr(surplus_quadratic(p.S));
  settle(r, compare_certified(RealExpr(p.T), Relation::GreaterEqual, rhs, o.precision_cap));
  return r;
}

BoundCheckRecord check_T_upper_shape(const NumberProfile& p, const CheckOptions& o) {
  BoundCheckRecord r = make_record(bound_id::kTUpperShape, p);
  if (!p.primitive_nondeficient) skip(r, hypothesis::kPrimitiveNondeficient);
  if (p.f.empty()) {
    skip(r, hypothesis::kOneOddExponent);
    return r;
  }
  const Integer& p1 = p.f.smallest_prime();
  const auto t = single_odd_exponent(p.f);
  if (!t) {
    skip(r, hypothesis::kOneOddExponent);
  } else {
    const Integer& pt = p.f[*t].prime;
    const bool stated = pt + 2 >= 2 * p1;
    const bool alternative = 2 * p1 <= pt + 1;
    if (!stated) skip(r, hypothesis::kPtVersusP1);
    if (stated != alternative) r.flags.emplace_back("p_t-readings-differ");
  }
  if (p1 < 11) skip(r, hypothesis::kP1AtLeast11);
  const Rational c = make_rational(Integer(11), Integer(50 * p1 * p1));
  settle(r, compare_certified(RealExpr(p.T), Relation::Less, log(RealExpr(2L)) - RealExpr(c), o.precision_cap));
  return r;
}

BoundCheckRecord check_H_prelude(const NumberProfile& p) {
  BoundCheckRecord r = make_record(bound_id::kHPrelude, p);
  if (p.f.empty() || !single_odd_exponent(p.f)) {
    skip(r, hypothesis::kOneOddExponent);
    return r;
  }
  const Integer& p1 = p.f.smallest_prime();
  if (p1 < 3) {
    skip(r, hypothesis::kP1AtLeast3);
    return r;
  }
  const Rational factor = 1 + make_rational(Integer(3), Integer(4 * p1 * p1));
  settle(r, compare_exact(p.H, Relation::LessEqual, p.h * factor));
  return r;
}

BoundCheckRecord check_H_over_h_ratio(const NumberProfile& p) {
  BoundCheckRecord r = make_record(bound_id::kHOverH, p);
  const auto j = p.f.empty() ? std::nullopt : single_odd_exponent(p.f);
  if (!j) {
    skip(r, hypothesis::kOneOddExponent);
    return r;
  }
  if (p.f.smallest_prime() < 3) {
    skip(r, hypothesis::kP1AtLeast3);
    return r;
  }
  Rational bound = 1;
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    const Integer& q = p.f[i].prime;
    const Integer power = i == *j ? Integer(q * q) : Integer(q * q * q);
    bound *= make_rational(power, power - 1);
  }
  settle(r, compare_exact(p.H / p.h, Relation::LessEqual, bound));
  return r;
}

BoundCheckRecord check_generalized_puchta(const NumberProfile& p, const Rational& alpha) {
  BoundCheckRecord r = make_record(bound_id::kPuchta, p);
  r.input += " alpha=" + to_string(alpha);
  if (!p.primitive_nondeficient) skip(r, hypothesis::kPrimitiveNondeficient);
  if (alpha <= 0 || alpha >= 1) skip(r, hypothesis::kAlphaRange);
  if (p.S < alpha) skip(r, hypothesis::kSurplusAtLeastAlpha);
  if (!r.applicable()) return r;

  const Integer k(static_cast<unsigned long>(p.f.size()));
  const Rational first = Rational(2 * (k + 2 + p.f.smallest_prime())) / alpha;
  const Rational second = Rational(k * (k + 1));
  const Rational bound = first > second ? first : second;
  std::size_t best = 0;
  Integer smallest;
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    const Integer v = ipow(p.f[i].prime, p.f[i].exponent + 1);
    if (i == 0 || v < smallest) {
      smallest = v;
      best = i;
    }
  }
  const std::string witness = p.f[best].prime.get_str() + "^" + std::to_string(p.f[best].exponent + 1);
  settle(r, compare_exact(Rational(smallest), Relation::Less, bound, witness));
  return r;
}

BoundCheckRecord check_servais(const NumberProfile& p) {
  BoundCheckRecord r = make_record(bound_id::kServais, p);
  if (!p.nondeficient) {
    skip(r, hypothesis::kNondeficient);
    return r;
  }
  settle(r, compare_exact(Rational(p.f.smallest_prime()), Relation::LessEqual,
                          Rational(Integer(static_cast<unsigned long>(p.f.size())))));
  return r;
}

std::vector<BoundCheckRecord> check_largest_prime_bounds(const NumberProfile& p) {
  std::vector<BoundCheckRecord> out;
  auto start = [&](std::string_view id, bool empirical, bool needs_two) {
    BoundCheckRecord r = make_record(id, p);
    r.empirical = empirical;
    if (!p.primitive_nondeficient) skip(r, hypothesis::kPrimitiveNondeficient);
    if (needs_two && p.f.size() < 2) skip(r, hypothesis::kAtLeastTwoPrimes);
    return r;
  };
  BoundCheckRecord cube = start(bound_id::kLargestCube, true, false);
  BoundCheckRecord square = start(bound_id::kLargestSquare, false, false);
  BoundCheckRecord second = start(bound_id::kSecondLargest, true, true);
  BoundCheckRecord top = start(bound_id::kTopTwo, true, true);
  if (!p.f.empty()) {
    const Integer& pk = p.f.largest_prime();
    settle(cube, compare_exact(Rational(ipow(pk, 3)), Relation::Less, Rational(3 * p.n)));
    settle(square, compare_exact(Rational(pk * pk), Relation::Less, Rational(2 * p.n)));
    if (p.f.size() >= 2) {
      const Integer& pk1 = p.f[p.f.size() - 2].prime;
      settle(second, compare_exact(Rational(ipow(pk1, 5)), Relation::Less, Rational(2 * p.n)));
      settle(top, compare_exact(Rational(ipow(pk * pk1, 4)), Relation::Less, Rational(6 * p.n * p.n)));
    }
  }
  for (auto* r : {&cube, &square, &second, &top}) {
    if (!r->applicable()) r->status = Status::Skipped;
    out.push_back(std::move(*r));
  }
  return out;
}

BoundCheckRecord check_dol(const NumberProfile& p, const CheckOptions& o) {
  BoundCheckRecord r = make_record(bound_id::kDol, p);
  if (p.n < 2) {
    skip(r, hypothesis::kNAtLeast2);
    return r;
  }
  const Integer& p1 = p.f.smallest_prime();
  const RealExpr rhs = RealExpr(p.n) * (log(RealExpr(p.n)) / log(RealExpr(p1))) / RealExpr(p1);
  settle(r, compare_certified(RealExpr(arithmetic_derivative(p.f)), Relation::LessEqual, rhs, o.precision_cap));
  return r;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::PrimitiveNondeficient: return "pnd";
    case Suite::Shape: return "shape";
    case Suite::LargestPrime: return "largest-prime";
    case Suite::Lemmas: return "lemmas";
    case Suite::Specials: return "specials";
    case Suite::All: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::PrimitiveNondeficient, Suite::Shape, Suite::LargestPrime, Suite::Lemmas, Suite::Specials,
                  Suite::All}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void SweepSummary::add(const BoundCheckRecord& r) {
  ++records;
  switch (r.status) {
    case Status::Holds: ++holds; break;
    case Status::Fails: ++fails; break;
    case Status::Undecided: ++undecided; break;
    case Status::Skipped: ++skipped; break;
  }
  if (r.violation()) ++violations;
  if (r.applicable() && r.empirical && r.status == Status::Fails) ++empirical_fails;
}

void SweepSummary::merge(const SweepSummary& o) {
  records += o.records;
  holds += o.holds;
  fails += o.fails;
  undecided += o.undecided;
  skipped += o.skipped;
  violations += o.violations;
  empirical_fails += o.empirical_fails;
}

namespace {

std::vector<BoundCheckRecord> pnd_records(const Factorization& f, Suite suite, const CheckOptions& o) {
  const NumberProfile p = NumberProfile::of(f, true);
  std::vector<BoundCheckRecord> out;
  if (suite == Suite::LargestPrime) return check_largest_prime_bounds(p);
  out.push_back(check_T_lower_simple(p, o));
  out.push_back(check_T_lower_refined(p, o));
  out.push_back(check_T_upper_shape(p, o));
  out.push_back(check_generalized_puchta(p, p.S));
  out.push_back(check_servais(p));
  out.push_back(std::move(check_largest_prime_bounds(p)[1]));
  out.push_back(check_dol(p, o));
  return out;
}

constexpr std::size_t kBatch = 512;

}  // namespace

SweepSummary sweep_bounds(Suite suite, const SweepOptions& options,
                          const std::function<void(const BoundCheckRecord&)>& emit) {
  SweepSummary summary;
  const CheckOptions co{options.precision_cap};
  auto deliver = [&](const std::vector<std::vector<BoundCheckRecord>>& batches) {
    for (const auto& batch : batches) {
      for (const auto& r : batch) {
        summary.add(r);
        emit(r);
      }
    }
  };

  if (suite == Suite::PrimitiveNondeficient || suite == Suite::LargestPrime) {
    EnumerateOptions eo;
    eo.odd_only = options.odd_only;
    eo.jobs = options.jobs;
    const auto numbers = enumerate_primitive_nondeficient(options.limit, eo);
    const std::size_t chunks = (numbers.size() + kBatch - 1) / kBatch;
    deliver(ordered_map(chunks, options.jobs, [&](std::size_t c) {
      std::vector<BoundCheckRecord> out;
      const std::size_t end = std::min(numbers.size(), (c + 1) * kBatch);
      for (std::size_t i = c * kBatch; i < end; ++i) {
        for (auto& r : pnd_records(numbers[i], suite, co)) out.push_back(std::move(r));
      }
      return out;
    }));
    return summary;
  }

  if (suite == Suite::Shape) {
    // The shape needs p1 >= 3, so only odd n qualify.
    if (options.limit > 0xffffffffULL) throw std::invalid_argument("shape sweep limit must fit in 32 bits");
    const SpfTable table(static_cast<std::uint32_t>(std::max<std::uint64_t>(options.limit, 2)));
    const auto ranges = split_range(3, options.limit, 1 << 14);
    deliver(ordered_map(ranges.size(), options.jobs, [&](std::size_t c) {
      std::vector<BoundCheckRecord> out;
      for (std::uint64_t n = ranges[c].lo | 1; n <= ranges[c].hi; n += 2) {
        const Factorization f = factorize(static_cast<std::uint32_t>(n), table);
        if (!shape_ok(f)) continue;
        const NumberProfile p = NumberProfile::of(f, false);
        out.push_back(check_H_prelude(p));
        out.push_back(check_H_over_h_ratio(p));
      }
      return out;
    }));
    return summary;
  }

  throw std::invalid_argument("suite '" + std::string(to_string(suite)) + "' is not a number sweep");
}

}  // namespace abundancy
