#pragma once

// Scan for primes q whose own factor q/(q-1) would be what pushes
// H(odd(q+1)) past 2.

#include <cstdint>
#include <string>
#include <vector>

#include "abundancy/integer.hpp"

namespace abundancy {

struct SpecialsReport {
  std::uint64_t q_limit = 0;
  bool only_1_mod_4 = false;
  std::uint64_t scanned = 0;
  /// Primes with H(odd(q+1)) < 2 < H(q odd(q+1)). Expected empty.
  std::vector<std::uint64_t> witnesses;
  /// Primes with H(odd(q+1)) <= 2 < H(q odd(q+1)); each one gets the
  /// bound q <= 2 prod (p - 1) - 1 over the primes of odd(q+1) checked.
  std::uint64_t triggering = 0;
  std::uint64_t lemma_failures = 0;
  /// Primes where H(odd(q+1)) < 2 on its own.
  std::uint64_t below_two = 0;
  /// Largest H(odd(q+1)) * q/(q-1) seen among q with H(odd(q+1)) < 2.
  Rational closest;
  std::uint64_t closest_q = 0;

  bool ok() const { return witnesses.empty() && lemma_failures == 0; }
};

/// H(odd(q+1)) and H(q odd(q+1)) for one prime q, exactly.
struct SpecialCell {
  Rational h_odd;
  Rational h_times_q;
};
SpecialCell special_cell(std::uint64_t q);

/// Odd primes 3 <= q <= q_limit; q = 2 is excluded because the odd-part
/// normalization is meaningless there (H(3) = 3/2, H(6) = 3).
SpecialsReport no_tricky_specials_scan(std::uint64_t q_limit, bool only_1_mod_4 = false, unsigned jobs = 1);

}  // namespace abundancy
