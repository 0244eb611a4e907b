#include "abundancy/enumerate.hpp"

#include <cmath>

#include "abundancy/divisor_functions.hpp"
#include "abundancy/parallel.hpp"
#include "abundancy/primes.hpp"

namespace abundancy {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct SieveSegment {
  u64 lo = 0;
  std::vector<u64> sigma;
  std::vector<u64> rem;  // cofactor left after dividing out primes <= sqrt(hi)
};

SieveSegment sieve_segment(u64 lo, u64 hi, const std::vector<std::uint32_t>& base) {
  SieveSegment seg;
  seg.lo = lo;
  const u64 len = hi - lo + 1;
  seg.sigma.assign(len, 1);
  seg.rem.resize(len);
  for (u64 i = 0; i < len; ++i) seg.rem[i] = lo + i;
  for (std::uint32_t p : base) {
    if (u64{p} * p > hi) break;
    for (u64 m = (lo + p - 1) / p * p; m <= hi; m += p) {
      u64& r = seg.rem[m - lo];
      u64 pk = 1, s = 1;
      while (r % p == 0) {
        r /= p;
        pk *= p;
        s += pk;
      }
      seg.sigma[m - lo] *= s;
    }
  }
  for (u64 i = 0; i < len; ++i) {
    if (seg.rem[i] > 1) seg.sigma[i] *= seg.rem[i] + 1;
  }
  return seg;
}

// n/p is non-deficient, where p^a || n and sigma(n) = s.
bool quotient_nondeficient(u64 n, u64 s, u64 p, unsigned a) {
  u64 sp = 1, pk = 1;  // sigma(p^(a-1))
  for (unsigned i = 1; i < a; ++i) {
    pk *= p;
    sp += pk;
  }
  const u64 sigma_pa = sp + pk * p;
  const u128 sigma_q = static_cast<u128>(s / sigma_pa) * sp;
  return sigma_q * p >= static_cast<u128>(2) * n;
}

std::vector<Factorization> primitive_in_segment(u64 lo, u64 hi, bool odd_only,
                                                const std::vector<std::uint32_t>& base) {
  SieveSegment seg = sieve_segment(lo, hi, base);
  const u64 len = hi - lo + 1;
  // 1 = candidate (non-deficient), 0 = rejected.
  std::vector<std::uint8_t> candidate(len, 0);
  for (u64 i = 0; i < len; ++i) {
    const u64 n = lo + i;
    if (odd_only && n % 2 == 0) continue;
    candidate[i] = static_cast<u128>(seg.sigma[i]) >= static_cast<u128>(2) * n;
  }
  for (std::uint32_t p : base) {
    if (u64{p} * p > hi) break;
    for (u64 m = (lo + p - 1) / p * p; m <= hi; m += p) {
      if (!candidate[m - lo]) continue;
      unsigned a = 0;
      for (u64 r = m; r % p == 0; r /= p) ++a;
      if (quotient_nondeficient(m, seg.sigma[m - lo], p, a)) candidate[m - lo] = 0;
    }
  }
  std::vector<Factorization> out;
  for (u64 i = 0; i < len; ++i) {
    if (!candidate[i]) continue;
    const u64 n = lo + i;
    const u64 q = seg.rem[i];
    if (q > 1 && quotient_nondeficient(n, seg.sigma[i], q, 1)) continue;
    out.push_back(factorize(n));
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> sigma_segment(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || hi < lo) return {};
  const auto base = small_primes(static_cast<std::uint32_t>(isqrt(hi)));
  return sieve_segment(lo, hi, base).sigma;
}

void for_each_primitive_nondeficient(std::uint64_t limit, const EnumerateOptions& options,
                                     const std::function<void(const Factorization&)>& emit) {
  if (limit < 2) return;
  const auto base = small_primes(static_cast<std::uint32_t>(isqrt(limit)));
  const auto ranges = split_range(2, limit, options.segment);
  const std::size_t batch = std::max(1u, options.jobs);
  for (std::size_t start = 0; start < ranges.size(); start += batch) {
    const std::size_t count = std::min(batch, ranges.size() - start);
    auto chunks = ordered_map(count, options.jobs, [&](std::size_t i) {
      const Range& r = ranges[start + i];
      return primitive_in_segment(r.lo, r.hi, options.odd_only, base);
    });
    for (const auto& chunk : chunks) {
      for (const auto& f : chunk) emit(f);
    }
  }
}

std::vector<Factorization> enumerate_primitive_nondeficient(std::uint64_t limit, const EnumerateOptions& options) {
  std::vector<Factorization> out;
  for_each_primitive_nondeficient(limit, options, [&](const Factorization& f) { out.push_back(f); });
  return out;
}

std::vector<std::uint64_t> perfect_numbers_upto(std::uint64_t limit, unsigned jobs) {
  std::vector<std::uint64_t> out;
  if (limit < 1) return out;
  const auto base = small_primes(static_cast<std::uint32_t>(isqrt(limit)));
  const auto ranges = split_range(1, limit, std::uint64_t{1} << 22);
  auto found = ordered_map(ranges.size(), jobs, [&](std::size_t i) {
    SieveSegment seg = sieve_segment(ranges[i].lo, ranges[i].hi, base);
    std::vector<std::uint64_t> hits;
    for (u64 j = 0; j < seg.sigma.size(); ++j) {
      if (seg.sigma[j] == 2 * (seg.lo + j)) hits.push_back(seg.lo + j);
    }
    return hits;
  });
  for (const auto& hits : found) out.insert(out.end(), hits.begin(), hits.end());
  return out;
}

}  // namespace abundancy
