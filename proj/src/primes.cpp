#include "abundancy/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abundancy {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n - 1 = d * 2^s with d odd; true if a does not witness compositeness.
bool strong_probable_prime(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

PrimalityResult is_prime(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("is_prime requires n >= 0");
  if (fits_u64(n)) return {is_prime_u64(to_u64(n)), Certainty::Proven};
  int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
  return {r != 0, r == 2 ? Certainty::Proven : Certainty::Probable};
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::span<const std::uint32_t> trial_primes() {
  static const std::vector<std::uint32_t> primes = small_primes(1'000'000);
  return primes;
}

PrimeStream::PrimeStream(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment)
    : lo_(std::max<std::uint64_t>(lo, 2)), hi_(hi), segment_(std::max<std::uint64_t>(segment, 64)) {
  if (hi_ < lo_) {
    done_ = true;
    return;
  }
  if (hi_ > (std::uint64_t{1} << 62)) throw std::out_of_range("PrimeStream range too large");
  base_ = small_primes(static_cast<std::uint32_t>(isqrt(hi_)));
  seg_lo_ = lo_;
  fill_segment();
}

void PrimeStream::fill_segment() {
  const std::uint64_t seg_hi = std::min(hi_, seg_lo_ + segment_ - 1);
  composite_.assign(seg_hi - seg_lo_ + 1, 0);
  for (std::uint32_t p : base_) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp > seg_hi) break;
    std::uint64_t start = std::max(pp, (seg_lo_ + p - 1) / p * p);
    for (std::uint64_t m = start; m <= seg_hi; m += p) composite_[m - seg_lo_] = 1;
  }
  cursor_ = 0;
}

std::uint64_t PrimeStream::next() {
  while (!done_) {
    while (cursor_ < composite_.size()) {
      std::size_t i = cursor_++;
      if (!composite_[i]) return seg_lo_ + i;
    }
    const std::uint64_t seg_hi = seg_lo_ + composite_.size() - 1;
    if (seg_hi >= hi_) {
      done_ = true;
      break;
    }
    seg_lo_ = seg_hi + 1;
    fill_segment();
  }
  return 0;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  PrimeStream stream(lo, hi);
  while (auto p = stream.next()) out.push_back(p);
  return out;
}

SpfTable::SpfTable(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
  if (limit >= 1) spf_[1] = 1;
}

}  // namespace abundancy
