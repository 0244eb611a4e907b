#include "abundancy/search.hpp"

#include <algorithm>

#include "abundancy/divisor_functions.hpp"
#include "abundancy/parallel.hpp"
#include "abundancy/primes.hpp"

namespace abundancy {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

PartialFactorization multiply_all(const std::vector<PartialFactorization>& parts) {
  PartialFactorization out;
  out.trial_floor = kTrialLimit;
  for (const auto& p : parts) out = out.times(p);
  return out;
}

// Walks the cofactor of pf further with Pollard-Brent, keeping its floor.
PartialFactorization deepen(const PartialFactorization& pf, const SearchOptions& o) {
  if (pf.complete()) return pf;
  FactorOptions fo;
  fo.trial_limit = 0;
  fo.rho_budget = o.factor_budget;
  fo.seed = o.seed;
  PartialFactorization more = factorize_partial(pf.cofactor, fo);
  more.trial_floor = pf.trial_floor;
  PartialFactorization out;
  out.known = pf.known.times(more.known);
  out.cofactor = more.cofactor;
  out.trial_floor = pf.trial_floor;
  out.all_proven = pf.all_proven && more.all_proven;
  return out;
}

CellVerdict decide_cell(const HBoundResult& base, const HBoundResult& with_p) {
  if (base.verdict == HVerdict::CertifiedBelow2 && with_p.verdict == HVerdict::CertifiedAbove2) return CellVerdict::Witness;
  if (base.lower >= 2 || with_p.upper <= 2) return CellVerdict::NonWitness;
  return CellVerdict::Inconclusive;
}

std::vector<std::string> cell_notes(const SearchCell& c, const PartialFactorization& x) {
  std::vector<std::string> notes;
  if (c.verdict == CellVerdict::NonWitness) {
    notes.push_back(c.base.lower >= 2 ? "H(X) >= 2" : "H(pX) <= 2");
  }
  if (!x.complete()) {
    notes.push_back("cofactor of " + std::to_string(mpz_sizeinbase(x.cofactor.get_mpz_t(), 10)) + " digits unfactored");
    if (c.with_p.verdict == HVerdict::CertifiedAbove2) notes.push_back("H(pX) > 2 certified; H(X) < 2 unresolved");
  }
  if (!x.all_proven) notes.push_back("some known primes are probable primes");
  return notes;
}

void tally(SearchSummary& s, const SearchCell& c) {
  ++s.cells;
  switch (c.verdict) {
    case CellVerdict::Witness:
      ++s.witnesses;
      s.witness_cells.push_back(c);
      break;
    case CellVerdict::NonWitness: ++s.non_witnesses; break;
    case CellVerdict::Inconclusive:
      ++s.inconclusive;
      s.inconclusive_cells.push_back(c);
      break;
  }
}

template <typename Make>
SearchSummary run_cells(std::string question, std::size_t count, const SearchOptions& o, const CellSink& sink, Make make) {
  SearchSummary summary;
  summary.question = std::move(question);
  constexpr std::size_t kBatch = 64;
  const std::size_t batches = (count + kBatch - 1) / kBatch;
  const auto results = ordered_map(batches, o.jobs, [&](std::size_t b) {
    std::vector<SearchCell> out;
    for (std::size_t i = b * kBatch; i < std::min(count, (b + 1) * kBatch); ++i) out.push_back(make(i));
    return out;
  });
  for (const auto& batch : results) {
    for (const auto& c : batch) {
      tally(summary, c);
      if (sink) sink(c);
    }
  }
  return summary;
}

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t limit) { return limit < 3 ? std::vector<std::uint64_t>{} : primes_in(3, limit); }

}  // namespace

std::string_view to_string(HVerdict v) {
  switch (v) {
    case HVerdict::CertifiedBelow2: return "CertifiedBelow2";
    case HVerdict::CertifiedAbove2: return "CertifiedAbove2";
    case HVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(CellVerdict v) {
  switch (v) {
    case CellVerdict::Witness: return "Witness";
    case CellVerdict::NonWitness: return "NonWitness";
    case CellVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

HBoundResult H_partial(const PartialFactorization& pf) {
  HBoundResult r;
  r.lower = abundancy_limit(pf.known);
  r.complete = pf.complete();
  if (r.complete) {
    r.upper = r.lower;
    r.verdict = r.lower < 2 ? HVerdict::CertifiedBelow2 : r.lower > 2 ? HVerdict::CertifiedAbove2 : HVerdict::Inconclusive;
    return r;
  }
  // Every prime of the cofactor exceeds F, so contributes at most (F+1)/F.
  const Integer F = std::max<std::uint64_t>(pf.trial_floor, 1);
  unsigned long j = 0;
  for (Integer power = F + 1; power <= pf.cofactor; power *= F + 1) ++j;
  const Rational step = make_rational(F + 1, F);
  Rational factor = 1;
  for (unsigned long i = 0; i < j; ++i) factor *= step;
  r.upper = r.lower * factor;
  r.verdict = r.lower > 2 ? HVerdict::CertifiedAbove2 : HVerdict::Inconclusive;
  return r;
}

PartialFactorization times_prime(const PartialFactorization& pf, const Integer& p) {
  PartialFactorization out = pf;
  out.known = pf.known.times(Factorization::from_trusted({{p, 1}}));
  return out;
}

PartialFactorization odd_part(const PartialFactorization& pf) {
  PartialFactorization out = pf;
  if (pf.known.exponent_of(2) > 0) {
    std::vector<PrimePower> terms(pf.known.begin() + 1, pf.known.end());
    out.known = Factorization::from_trusted(std::move(terms));
  }
  return out;
}

int mobius(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mobius(0)");
  int mu = 1;
  for (const auto& t : factorize(m)) {
    if (t.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Integer cyclotomic_value(std::uint64_t m, const Integer& x) {
  if (m == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  Integer num = 1, den = 1;
  for (std::uint64_t d : divisors_of(m)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const Integer term = ipow(x, m / d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::domain_error("cyclotomic value undefined at this point");
  }
  return num / den;
}

SearchCell classify_cell(std::string question, std::string cell, const Integer& p, const std::vector<Integer>& factors,
                         const SearchOptions& options) {
  SearchCell c;
  c.question = std::move(question);
  c.cell = std::move(cell);
  FactorOptions trial;
  trial.trial_limit = kTrialLimit;
  trial.rho_budget = 0;
  trial.seed = options.seed;
  std::vector<PartialFactorization> parts;
  for (const auto& f : factors) parts.push_back(odd_part(factorize_partial(abundancy::odd_part(f), trial)));

  PartialFactorization x = multiply_all(parts);
  auto evaluate = [&] {
    c.base = H_partial(x);
    c.with_p = H_partial(times_prime(x, p));
    c.verdict = decide_cell(c.base, c.with_p);
  };
  evaluate();
  if (c.verdict == CellVerdict::Inconclusive && !x.complete() && options.factor_budget > 0) {
    for (auto& part : parts) part = deepen(part, options);
    x = multiply_all(parts);
    evaluate();
  }
  c.notes = cell_notes(c, x);
  return c;
}

SearchSummary search_question1(std::uint64_t p_limit, const SearchOptions& options, const CellSink& sink) {
  const auto primes = odd_primes_upto(p_limit);
  return run_cells("q1", primes.size(), options, sink, [&](std::size_t i) {
    const Integer p = from_u64(primes[i]);
    return classify_cell("q1", "p=" + p.get_str(), p, {p * p + p + 1}, options);
  });
}

SearchSummary search_question2(std::uint64_t m_limit, std::uint64_t p_limit, const SearchOptions& options,
                               const CellSink& sink) {
  const auto primes = odd_primes_upto(p_limit);
  const std::size_t per_m = primes.size();
  return run_cells("q2", per_m * m_limit, options, sink, [&](std::size_t i) {
    const std::uint64_t m = i / per_m + 1;
    const Integer p = from_u64(primes[i % per_m]);
    return classify_cell("q2", "m=" + std::to_string(m) + ",p=" + p.get_str(), p, {cyclotomic_value(m, p)}, options);
  });
}

SearchCell sigma_power_cell(std::uint64_t p, std::uint64_t a, const SearchOptions& options) {
  std::vector<Integer> factors;
  const Integer P = from_u64(p);
  for (std::uint64_t d : divisors_of(a + 1)) {
    if (d > 1) factors.push_back(cyclotomic_value(d, P));
  }
  return classify_cell("q3", "p=" + std::to_string(p) + ",a=" + std::to_string(a), P, factors, options);
}

SearchSummary search_question3(std::uint64_t p_limit, std::uint64_t a_limit, const SearchOptions& options,
                               const CellSink& sink) {
  const auto primes = odd_primes_upto(p_limit);
  const std::size_t per_p = a_limit >= 2 ? a_limit / 2 : 0;
  return run_cells("q3", primes.size() * per_p, options, sink, [&](std::size_t i) {
    return sigma_power_cell(primes[i / per_p], 2 * (i % per_p + 1), options);
  });
}

std::vector<SearchCell> question3_anchors(const SearchOptions& options) {
  std::vector<SearchCell> out;
  for (auto [p, a] : {std::pair<std::uint64_t, std::uint64_t>{5, 5}, {7, 944}}) {
    SearchCell c = sigma_power_cell(p, a, options);
    c.question = "q3-anchor";
    // The literal reading H(sigma(p^a)) < 2 fails outright: sigma(p^a) is even.
    c.notes.push_back("odd-part reading; sigma(p^a) is even for odd a");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> prop3_hypothesis_failures(const Factorization& f) {
  return check_T_upper_shape(NumberProfile::of(f)).hypothesis_failures;
}

Prop3Report search_prop3_witness(std::uint64_t prime_floor, std::uint64_t budget) {
  Prop3Report report;
  report.prime_floor = prime_floor;
  report.example = Factorization{{3, 2}, {5, 1}, {11, 2}, {13, 2}, {17, 2}, {19, 2}, {23, 2}};
  report.example_primitive_nondeficient = is_primitive_nondeficient(report.example);
  report.example_failures = prop3_hypothesis_failures(report.example);

  const auto pool = primes_in(std::max<std::uint64_t>(prime_floor, 2), std::max<std::uint64_t>(prime_floor, 2) + 20'000);
  std::vector<Factorization> found;

  // Try a base set of squared primes; close the gap with r^1, largest r first.
  auto try_base = [&](const std::vector<std::uint64_t>& base) {
    std::vector<PrimePower> terms;
    for (auto q : base) terms.push_back({from_u64(q), 2});
    const Factorization B = Factorization::from_trusted(terms);
    const Rational h = abundancy_index(B);
    if (h >= 2) return;
    const Rational ratio = h / (2 - h);
    const Integer R = ratio.get_num() / ratio.get_den();
    const Integer p1 = from_u64(base.front());
    const Integer r_min = std::max<Integer>(from_u64(prime_floor), 2 * p1 - 1);
    Integer r = R;
    for (int tries = 0; tries < 4 && r >= r_min && report.attempts < budget; --r) {
      if (!is_prime(r) || B.exponent_of(r) > 0) continue;
      ++tries;
      ++report.attempts;
      const Factorization n = B.times(Factorization::from_trusted({{r, 1}}));
      if (is_primitive_nondeficient(n) && prop3_hypothesis_failures(n).empty()) found.push_back(n);
    }
  };

  for (std::size_t c = 1; c < pool.size() && report.attempts < budget; ++c) {
    std::vector<std::uint64_t> base(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(c));
    std::vector<PrimePower> terms;
    for (auto q : base) terms.push_back({from_u64(q), 2});
    if (abundancy_index(Factorization::from_trusted(terms)) >= 2) break;
    try_base(base);
    // One hole: drop pool[j] and take pool[c] instead.
    for (std::size_t j = 0; j < c && report.attempts < budget; ++j) {
      std::vector<std::uint64_t> holed;
      for (std::size_t i = 0; i <= c; ++i) {
        if (i != j) holed.push_back(pool[i]);
      }
      try_base(holed);
    }
  }

  std::sort(found.begin(), found.end(), [](const Factorization& a, const Factorization& b) { return a.value() < b.value(); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  report.witnesses = std::move(found);
  for (const auto& w : report.witnesses) report.witness_checks.push_back(check_T_upper_shape(NumberProfile::of(w)));
  report.progress = std::to_string(report.attempts) + " candidates tried, " + std::to_string(report.witnesses.size()) +
                    " witnesses";
  return report;
}

}  // namespace abundancy
