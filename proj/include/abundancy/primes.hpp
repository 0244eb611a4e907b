#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abundancy/integer.hpp"

namespace abundancy {

enum class Certainty {
  Proven,    // deterministic witness set (n < 2^64) or trial division
  Probable,  // BPSW + 40 Miller-Rabin rounds
};

struct PrimalityResult {
  bool prime = false;
  Certainty certainty = Certainty::Proven;
  explicit operator bool() const { return prime; }
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Deterministic below 2^64, probable-prime battery above.
PrimalityResult is_prime(const Integer& n);

/// Primes <= limit via a plain Eratosthenes sieve.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

/// Cached primes <= 10^6 used by trial division.
std::span<const std::uint32_t> trial_primes();

/// Ascending stream of primes in [lo, hi], sieved segment by segment.
///
///   for (PrimeStream s(lo, hi); auto p = s.next();) ...
///
/// Memory is O(sqrt(hi) + segment).
class PrimeStream {
 public:
  static constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 18;

  PrimeStream(std::uint64_t lo, std::uint64_t hi,
              std::uint64_t segment = kDefaultSegment);

  /// Next prime, or 0 once the range is exhausted.
  std::uint64_t next();

 private:
  void fill_segment();

  std::uint64_t lo_;
  std::uint64_t hi_;
  std::uint64_t segment_;
  std::uint64_t seg_lo_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint8_t> composite_;
  std::size_t cursor_ = 0;
  bool done_ = false;
};

/// Materialized form of PrimeStream.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Smallest-prime-factor table for [0, limit].
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t limit);
  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace abundancy
