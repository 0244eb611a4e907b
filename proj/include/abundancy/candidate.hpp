#pragma once

// Constraint checker for a (spoof) factorization treated as a hypothetical
// odd perfect number. Bases stand in for primes; primality is only checked
// on request.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abundancy/bounds.hpp"
#include "abundancy/spoof.hpp"

namespace abundancy {

namespace constraint_id {
inline constexpr std::string_view kFormalPrimes = "formal-primes";
inline constexpr std::string_view kPrimality = "primality";
inline constexpr std::string_view kOdd = "odd";
inline constexpr std::string_view kSpoofPerfect = "spoof-perfect";
inline constexpr std::string_view kEulerForm = "euler-form";
inline constexpr std::string_view kNot105 = "divisibility.105";
inline constexpr std::string_view kNot3_5_11_13 = "divisibility.3-5-11-13";
inline constexpr std::string_view kSpecialMod165 = "special-mod-165";
inline constexpr std::string_view kFiveExactly = "165-implies-5-exactly";
inline constexpr std::string_view kTableTLower = "table.T-lower-gcd15";
inline constexpr std::string_view kTableTUpper = "table.T-upper-gcd15";
inline constexpr std::string_view kTableH = "table.H-upper-gcd15";
inline constexpr std::string_view kHUpper = "H-upper.9/(4p1^2)";
inline constexpr std::string_view kTUpper = "T-upper.p1>=11";
inline constexpr std::string_view kSUpper = "S-upper.p1>=11";
inline constexpr std::string_view kAcquaahKonyagin = "acquaah-konyagin.cube";
inline constexpr std::string_view kLargestSquare = "largest-prime.square";
inline constexpr std::string_view kSecondLargest = "second-largest.fifth-power";
inline constexpr std::string_view kTopTwo = "top-two.fourth-power";
inline constexpr std::string_view kDris = "dris.fifth-power";
inline constexpr std::string_view kDrisRefined = "dris.fifth-power.refined";
inline constexpr std::string_view kServais = "servais";
}  // namespace constraint_id

struct ConstraintOutcome {
  std::string constraint_id;
  /// Holds, Fails or Undecided when applied; Skipped otherwise.
  Status status = Status::Skipped;
  std::optional<CheckResult> result;
  /// Why the constraint was skipped or failed, or what it compared.
  std::string note;
};

enum class CandidateVerdict { Consistent, Refuted };
std::string_view to_string(CandidateVerdict v);

struct CandidateReport {
  SpoofFactorization input;
  Integer value;
  /// Index into input.terms() of the special pair, when one was found.
  std::optional<std::size_t> special;
  std::vector<ConstraintOutcome> outcomes;
  CandidateVerdict verdict = CandidateVerdict::Consistent;
  /// Constraints that Fail, in report order.
  std::vector<std::string> refuted_by;
  std::vector<std::string> warnings;

  const ConstraintOutcome* find(std::string_view id) const;
};

struct CandidateOptions {
  /// Check every base for primality (all bases must be positive).
  bool verify_primality = false;
  /// Designated special pair; auto-detected when empty.
  std::optional<SpoofTerm> special;
  long precision_cap = kDefaultPrecisionCap;
};

/// Refuted iff at least one applied constraint Fails.
CandidateReport opn_candidate_report(const SpoofFactorization& sf, const CandidateOptions& options = {});

/// Verdict over a subset of outcomes; adding outcomes never turns Refuted
/// into Consistent.
CandidateVerdict verdict_of(const std::vector<ConstraintOutcome>& outcomes);

/// Published bounds for an odd perfect number by gcd(15, n), as printed
/// (six decimals, rounded outward).
struct Gcd15Row {
  unsigned gcd = 1;
  Rational t_lower;
  Rational t_upper;
  Rational h_upper;
};
const std::array<Gcd15Row, 4>& gcd15_table();
const Gcd15Row& gcd15_row(const Integer& n);
/// Reference card with citations.
std::string gcd15_table_text();

}  // namespace abundancy
