#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abundancy/integer.hpp"
#include "abundancy/primes.hpp"

namespace abundancy {

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization p_1^a_1 ... p_k^a_k with p_1 < ... < p_k.
/// The empty factorization is n = 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates ordering, exponents and primality; throws std::invalid_argument.
  explicit Factorization(std::vector<PrimePower> terms);
  Factorization(std::initializer_list<std::pair<long, unsigned long>> terms);

  /// Trusted construction for callers that produced primes themselves
  /// (sieves, factorize). Only ordering is sorted, nothing is re-checked.
  static Factorization from_trusted(std::vector<PrimePower> terms);

  const std::vector<PrimePower>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const PrimePower& operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  const Integer& smallest_prime() const { return terms_.front().prime; }
  const Integer& largest_prime() const { return terms_.back().prime; }

  Integer value() const;

  /// Exponent of p, 0 if p does not divide n.
  unsigned long exponent_of(const Integer& p) const;

  /// n / p for a prime p | n.
  Factorization divided_by(const Integer& p) const;
  /// n * m.
  Factorization times(const Factorization& other) const;
  /// n^k.
  Factorization power(unsigned long k) const;

  /// "3^3*5*7" style; "1" for the empty factorization.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> terms_;
};

/// Options for budgeted factoring.
struct FactorOptions {
  std::uint32_t trial_limit = 1'000'000;
  /// Pollard-Brent iterations allowed per composite cofactor.
  std::uint64_t rho_budget = 200'000;
  std::uint64_t seed = 0x5eed;
};

/// value = cofactor * prod p_i^a_i; cofactor has no prime factor below
/// trial_floor and is 1 when the factorization is complete.
struct PartialFactorization {
  Factorization known;
  Integer cofactor = 1;
  std::uint64_t trial_floor = 0;
  /// False when some known prime only passed the probable-prime battery.
  bool all_proven = true;

  bool complete() const { return cofactor == 1; }
  Integer value() const { return cofactor * known.value(); }
  /// Merge of two partial factorizations of coprime-or-not parts.
  PartialFactorization times(const PartialFactorization& other) const;
};

/// Trial division to options.trial_limit, then Pollard-Brent with the given
/// budget. Never throws for n >= 1; unsplit composites stay in the cofactor.
PartialFactorization factorize_partial(const Integer& n, const FactorOptions& options = {});

/// Complete factorization. Deterministic and always complete for n < 2^64;
/// larger inputs throw std::runtime_error if the budget leaves a cofactor.
/// Throws std::invalid_argument for n < 1.
Factorization factorize(const Integer& n, const FactorOptions& options = {});
Factorization factorize(std::uint64_t n);

/// Factorization of n <= table.limit() through the smallest-prime-factor chain.
Factorization factorize(std::uint32_t n, const SpfTable& table);

}  // namespace abundancy
