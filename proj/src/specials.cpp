#include "abundancy/specials.hpp"

#include <stdexcept>

#include "abundancy/divisor_functions.hpp"
#include "abundancy/factorization.hpp"
#include "abundancy/parallel.hpp"
#include "abundancy/primes.hpp"

namespace abundancy {

namespace {

struct Partial {
  SpecialsReport r;
  bool has_closest = false;
};

// 2 prod (p - 1) - 1 over the primes of f.
Integer lemma_bound(const Factorization& f) {
  Integer prod = 1;
  for (const auto& t : f) prod *= t.prime - 1;
  return 2 * prod - 1;
}

}  // namespace

SpecialCell special_cell(std::uint64_t q) {
  const Factorization f = factorize(odd_part(from_u64(q) + 1));
  const Rational h = abundancy_limit(f);
  return {h, h * make_rational(from_u64(q), from_u64(q - 1))};
}

SpecialsReport no_tricky_specials_scan(std::uint64_t q_limit, bool only_1_mod_4, unsigned jobs) {
  if (q_limit >= 0xffffffffULL) throw std::invalid_argument("q_limit must fit in 32 bits");
  const auto primes = primes_in(3, q_limit);
  const SpfTable table(static_cast<std::uint32_t>(q_limit + 1));
  constexpr std::size_t kChunk = 8192;
  const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  auto parts = ordered_map(chunks, jobs, [&](std::size_t c) {
    Partial part;
    const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const std::uint64_t q = primes[i];
      if (only_1_mod_4 && q % 4 != 1) continue;
      ++part.r.scanned;
      std::uint64_t m = q + 1;
      while (m % 2 == 0) m /= 2;
      const Factorization f = factorize(static_cast<std::uint32_t>(m), table);
      const Rational h = abundancy_limit(f);
      const Rational hq = h * make_rational(from_u64(q), from_u64(q - 1));
      if (h < 2) {
        ++part.r.below_two;
        if (!part.has_closest || hq > part.r.closest) {
          part.r.closest = hq;
          part.r.closest_q = q;
          part.has_closest = true;
        }
      }
      if (h < 2 && hq > 2) part.r.witnesses.push_back(q);
      if (h <= 2 && hq > 2) {
        ++part.r.triggering;
        if (from_u64(q) > lemma_bound(f)) ++part.r.lemma_failures;
      }
    }
    return part;
  });

  SpecialsReport report;
  report.q_limit = q_limit;
  report.only_1_mod_4 = only_1_mod_4;
  bool has_closest = false;
  for (const auto& part : parts) {
    report.scanned += part.r.scanned;
    report.witnesses.insert(report.witnesses.end(), part.r.witnesses.begin(), part.r.witnesses.end());
    report.triggering += part.r.triggering;
    report.lemma_failures += part.r.lemma_failures;
    report.below_two += part.r.below_two;
    if (part.has_closest && (!has_closest || part.r.closest > report.closest)) {
      report.closest = part.r.closest;
      report.closest_q = part.r.closest_q;
      has_closest = true;
    }
  }
  return report;
}

}  // namespace abundancy
