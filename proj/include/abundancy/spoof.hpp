#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abundancy/factorization.hpp"
#include "abundancy/integer.hpp"

namespace abundancy {

struct SpoofTerm {
  Integer base;
  unsigned long exponent = 1;

  friend bool operator==(const SpoofTerm&, const SpoofTerm&) = default;
};

/// Multiset of (x_i, b_i) with x_i != 0 and b_i >= 1. Bases need not be
/// prime, distinct or positive.
class SpoofFactorization {
 public:
  SpoofFactorization() = default;
  /// Throws std::invalid_argument on a zero base or zero exponent.
  explicit SpoofFactorization(std::vector<SpoofTerm> terms);

  static SpoofFactorization from(const Factorization& f);

  const std::vector<SpoofTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// prod x_i^b_i.
  Integer value() const;

  /// True when the bases are distinct and all > 1, so they can stand in for
  /// primes in analytic formulas.
  bool formal_primes() const;

  /// Terms sorted by base (stable), for reporting.
  SpoofFactorization sorted() const;

  /// Canonical factorization when every base is a distinct prime.
  std::optional<Factorization> as_factorization() const;

  /// "3^2*7^2*22021", negative bases parenthesized.
  std::string to_string() const;
  /// [[x,b],...]
  std::string to_json() const;

  /// Notes for degenerate inputs (bases of +-1).
  std::vector<std::string> warnings() const;

 private:
  std::vector<SpoofTerm> terms_;
};

/// prod_i (1 + x_i + ... + x_i^b_i).
Integer sigma_tilde(const SpoofFactorization& sf);

/// sigma_tilde = 2 * value.
bool is_spoof_perfect(const SpoofFactorization& sf);

/// Accepts "3^2*7^2*11^2*13^2*22021", "(-3)^1*5^2" or the JSON form
/// [[3,2],[7,2],...]. Throws std::invalid_argument on malformed text.
SpoofFactorization parse_spoof(std::string_view text);

/// A plain integer (factored) or the product grammar with prime bases.
/// Throws std::invalid_argument.
Factorization parse_factorization(std::string_view text, const FactorOptions& options = {});

}  // namespace abundancy
