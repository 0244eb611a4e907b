#pragma once

// Verifiers for the analytic lemmas behind the T and H bounds. Each sweep
// runs certified comparisons instance by instance and aggregates them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "abundancy/bounds.hpp"
#include "abundancy/certify.hpp"

namespace abundancy {

namespace lemma_id {
inline constexpr std::string_view kTaylor = "lemma.taylor-exp";
inline constexpr std::string_view kPiLower = "lemma.pi-lower";
inline constexpr std::string_view kNthPrime = "lemma.nth-prime-lower";
inline constexpr std::string_view kSquareTail = "lemma.prime-square-tail";
inline constexpr std::string_view kSquareProduct = "lemma.prime-square-product";
inline constexpr std::string_view kLogBound = "lemma.log-bound";
}  // namespace lemma_id

struct LemmaReport {
  std::string lemma_id;
  /// Human-readable range, e.g. "19 <= p <= 1000000".
  std::string domain;
  Verdict verdict = Verdict::Undecided;
  std::uint64_t checked = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t undecided = 0;
  /// The instance with the smallest margin, or the first failure.
  std::optional<CheckResult> tightest;
  std::string tightest_input;
  std::string detail;

  void add(const CheckResult& r, const std::string& input);
  /// Offers r as the tightest instance without counting it.
  void add_candidate(const CheckResult& r, const std::string& input);
  /// Holds when every instance holds, Fails on any failure, else Undecided.
  void finish();
};

/// Report row for the verify stream; the tightest instance supplies the
/// enclosures.
BoundCheckRecord to_record(const LemmaReport& report);

enum class TaylorMode { Sample, Certify };

struct LemmaOptions {
  long precision_cap = kDefaultPrecisionCap;
  unsigned jobs = 1;
};

/// 1 + x + x^2 >= exp(x + 2x^2/5) at a single x in [0, 1/11]; exact at 0.
/// Throws std::invalid_argument outside the domain.
CheckResult check_taylor_point(const Rational& x, long precision_cap = kDefaultPrecisionCap);

/// Sample: 10^4 + 1 grid points. Certify: interval bisection on
/// [2^-20, 1/11] proving log(1 + x + x^2) - x - 2x^2/5 > 0 on every cell,
/// with [0, 2^-20] discharged by the series sufficient condition.
LemmaReport verify_lemma_taylor(TaylorMode mode, const LemmaOptions& o = {});

/// The series sufficient condition at x (exact rational):
/// 2x/5 + 2x^2/25 + (1+2x/5)^2 y/6 + (1+2x/5)^2 y^2/24 / (1 - y/5) < 1/10,
/// y = x + 2x^2/5. Its value is increasing in x.
Rational taylor_series_bound(const Rational& x);

/// pi(p) >= p/log p + 1 for a single prime p (any p, for demonstration).
CheckResult check_pi_lower_at(std::uint64_t p, std::uint64_t pi_of_p, long precision_cap = kDefaultPrecisionCap);
/// Every prime 19 <= p <= limit.
LemmaReport verify_pi_lower(std::uint64_t limit, const LemmaOptions& o = {});

/// P_j >= j log j for 1 <= j <= limit.
LemmaReport verify_nth_prime_lower(std::uint64_t limit, const LemmaOptions& o = {});

/// log(1 + 1/(x-1)) <= 1/x + 25/(32x^2) for one integer x >= 2.
/// Throws std::invalid_argument for x < 2.
CheckResult check_log_bound_at(std::uint64_t x, long precision_cap = kDefaultPrecisionCap);
LemmaReport verify_log_bound(std::uint64_t x_limit, const LemmaOptions& o = {});

/// For every odd prime q <= q_limit: sum of 1/p^2 over primes q <= p <= L,
/// plus the tail majorant 1/L, is below (1/(q log q))(1 + 2 log log q/log q).
/// Throws std::invalid_argument if q_limit < 3 or L < q_limit.
LemmaReport verify_prime_square_tail(std::uint64_t q_limit, std::uint64_t cutoff, const LemmaOptions& o = {});
/// Same for log prod p^2/(p^2-1), tail majorant 2/L, against the bound
/// above plus 4/q^3.
LemmaReport verify_prime_square_product(std::uint64_t q_limit, std::uint64_t cutoff, const LemmaOptions& o = {});

/// Single-q forms; q must be an odd prime (std::invalid_argument otherwise).
CheckResult check_prime_square_tail_at(std::uint64_t q, std::uint64_t cutoff);
CheckResult check_prime_square_product_at(std::uint64_t q, std::uint64_t cutoff);

struct CEstimate {
  /// max (H(n) - 2) * p1 over primitive non-deficient n <= limit.
  Rational value;
  /// The first n attaining it; 0 when no such n exists.
  std::uint64_t attained_at = 0;
};
CEstimate estimate_C(std::uint64_t limit, bool odd_only = false, unsigned jobs = 1);

}  // namespace abundancy
