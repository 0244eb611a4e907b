#pragma once

// Certified checks of the inequalities relating T, H, S and the prime
// factors of primitive non-deficient numbers. Every check states its
// hypotheses; inputs that miss one are Skipped, never reported as Holds.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abundancy/certify.hpp"
#include "abundancy/factorization.hpp"

namespace abundancy {

enum class Status { Holds, Fails, Undecided, Skipped };
std::string_view to_string(Status s);

/// Stable identifiers used in reports.
namespace bound_id {
inline constexpr std::string_view kTLowerSimple = "prop.T-lower.simple";
inline constexpr std::string_view kTLowerRefined = "prop.T-lower.refined";
inline constexpr std::string_view kTUpperShape = "prop.T-upper.shape";
inline constexpr std::string_view kHPrelude = "lemma.H-prelude";
inline constexpr std::string_view kHOverH = "lemma.H-over-h.zeta3";
inline constexpr std::string_view kPuchta = "lemma.generalized-puchta";
inline constexpr std::string_view kServais = "prop.servais";
inline constexpr std::string_view kLargestCube = "bound.largest-prime.cube";
inline constexpr std::string_view kLargestSquare = "thm.largest-prime.square";
inline constexpr std::string_view kSecondLargest = "bound.second-largest-prime";
inline constexpr std::string_view kTopTwo = "bound.top-two-product";
inline constexpr std::string_view kDol = "bound.arithmetic-derivative";
}  // namespace bound_id

/// Hypothesis names carried by Skipped records.
namespace hypothesis {
inline constexpr std::string_view kPrimitiveNondeficient = "primitive-nondeficient";
inline constexpr std::string_view kNondeficient = "nondeficient";
inline constexpr std::string_view kOneOddExponent = "exactly-one-odd-exponent";
inline constexpr std::string_view kP1AtLeast3 = "p1>=3";
inline constexpr std::string_view kP1AtLeast11 = "p1>=11";
inline constexpr std::string_view kPtVersusP1 = "(p_t+2)/2>=p1";
inline constexpr std::string_view kAlphaRange = "0<alpha<1";
inline constexpr std::string_view kSurplusAtLeastAlpha = "S>=alpha";
inline constexpr std::string_view kAtLeastTwoPrimes = "k>=2";
inline constexpr std::string_view kNAtLeast2 = "n>=2";
}  // namespace hypothesis

struct BoundCheckRecord {
  std::string bound_id;
  /// The input: a factorization string or a parameter such as "q=19".
  std::string input;
  Status status = Status::Skipped;
  /// Present whenever the comparison was evaluated, including Skipped
  /// records that are computed anyway for reporting.
  std::optional<CheckResult> result;
  std::vector<std::string> hypothesis_failures;
  std::vector<std::string> flags;
  /// Observation on inputs where the bound is not a theorem.
  bool empirical = false;

  bool applicable() const { return hypothesis_failures.empty(); }
  /// Fails on an applicable, non-empirical check.
  bool violation() const { return applicable() && !empirical && status == Status::Fails; }
};

/// Cached exact quantities of one factored n.
struct NumberProfile {
  Factorization f;
  Integer n;
  Rational h, H, T, S;
  bool nondeficient = false;
  bool primitive_nondeficient = false;

  static NumberProfile of(const Factorization& f);
  /// Skips the primitivity test for callers that already know the answer.
  static NumberProfile of(const Factorization& f, bool primitive_nondeficient);
};

struct CheckOptions {
  long precision_cap = kDefaultPrecisionCap;
};

BoundCheckRecord check_T_lower_simple(const NumberProfile& p, const CheckOptions& o = {});
BoundCheckRecord check_T_lower_refined(const NumberProfile& p, const CheckOptions& o = {});
BoundCheckRecord check_T_upper_shape(const NumberProfile& p, const CheckOptions& o = {});
BoundCheckRecord check_H_prelude(const NumberProfile& p);
BoundCheckRecord check_H_over_h_ratio(const NumberProfile& p);
BoundCheckRecord check_generalized_puchta(const NumberProfile& p, const Rational& alpha);
BoundCheckRecord check_servais(const NumberProfile& p);
/// Cube (empirical), square (theorem), second-largest and top-two
/// (empirical), in that order.
std::vector<BoundCheckRecord> check_largest_prime_bounds(const NumberProfile& p);
BoundCheckRecord check_dol(const NumberProfile& p, const CheckOptions& o = {});

/// Exactly one odd exponent; its index, else empty.
std::optional<std::size_t> single_odd_exponent(const Factorization& f);

/// Verification suites. The first three are sweeps over n <= limit; the
/// rest are driven by the lemma and specials modules.
enum class Suite { PrimitiveNondeficient, Shape, LargestPrime, Lemmas, Specials, All };
std::string_view to_string(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

struct SweepOptions {
  std::uint64_t limit = 100'000;
  bool odd_only = false;
  unsigned jobs = 1;
  long precision_cap = kDefaultPrecisionCap;
};

struct SweepSummary {
  std::uint64_t records = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t undecided = 0;
  std::uint64_t skipped = 0;
  /// Fails on applicable, non-empirical checks.
  std::uint64_t violations = 0;
  /// Empirical Fails, counted separately.
  std::uint64_t empirical_fails = 0;

  void add(const BoundCheckRecord& r);
  void merge(const SweepSummary& other);
};

/// Streams records in ascending n, checks in a fixed order per n. Output does
/// not depend on options.jobs.
///  - PrimitiveNondeficient: both T lower bounds, the shape-restricted T
///    upper bound, generalized Puchta at alpha = S, Servais, p_k^2 < 2n and
///    the arithmetic-derivative bound over primitive non-deficient n.
///  - Shape: H prelude and H/h ratio over n with p1 >= 3 and one odd exponent.
///  - LargestPrime: the four largest-prime records over primitive
///    non-deficient n.
/// Throws std::invalid_argument for the non-sweep suites.
SweepSummary sweep_bounds(Suite suite, const SweepOptions& options,
                          const std::function<void(const BoundCheckRecord&)>& emit);

}  // namespace abundancy
