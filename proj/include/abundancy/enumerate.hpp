#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "abundancy/factorization.hpp"

namespace abundancy {

struct EnumerateOptions {
  bool odd_only = false;
  /// Numbers sieved per segment.
  std::uint64_t segment = std::uint64_t{1} << 22;
  /// Segments sieved concurrently; output order does not depend on it.
  unsigned jobs = 1;
};

/// Streams every primitive non-deficient n <= limit in ascending order.
/// sigma(n) comes from a segmented sieve, so no per-n factoring is needed to
/// reject deficient numbers.
void for_each_primitive_nondeficient(std::uint64_t limit, const EnumerateOptions& options,
                                     const std::function<void(const Factorization&)>& emit);

std::vector<Factorization> enumerate_primitive_nondeficient(std::uint64_t limit,
                                                            const EnumerateOptions& options = {});

/// sigma(n) for every n in [lo, hi] (lo >= 1), index 0 is lo.
std::vector<std::uint64_t> sigma_segment(std::uint64_t lo, std::uint64_t hi);

/// n <= limit with sigma(n) = 2n, by direct scan.
std::vector<std::uint64_t> perfect_numbers_upto(std::uint64_t limit, unsigned jobs = 1);

}  // namespace abundancy
