#pragma once

// Budgeted searches for primes p and sigma-like values X with
// H(X) < 2 < H(pX), built on partial factorizations.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abundancy/bounds.hpp"
#include "abundancy/factorization.hpp"

namespace abundancy {

enum class HVerdict { CertifiedBelow2, CertifiedAbove2, Inconclusive };
std::string_view to_string(HVerdict v);

struct HBoundResult {
  /// H over the known primes; a lower bound on H of the full value.
  Rational lower;
  bool complete = false;
  /// Upper bound from the cofactor size: each of its at most
  /// floor(log c / log F) prime factors exceeds the trial floor F. Equal to
  /// lower when complete.
  Rational upper;
  /// Above2 needs only lower > 2; Below2 needs a complete factorization.
  HVerdict verdict = HVerdict::Inconclusive;
};

HBoundResult H_partial(const PartialFactorization& pf);

/// pf with the factor p^1 multiplied in.
PartialFactorization times_prime(const PartialFactorization& pf, const Integer& p);
/// Drops the prime 2, leaving the odd part.
PartialFactorization odd_part(const PartialFactorization& pf);

int mobius(std::uint64_t m);
/// Phi_m(x) = prod over d | m of (x^(m/d) - 1)^mu(d), exact. m >= 1.
Integer cyclotomic_value(std::uint64_t m, const Integer& x);

enum class CellVerdict { Witness, NonWitness, Inconclusive };
std::string_view to_string(CellVerdict v);

/// One (p, X) cell: does H(X) < 2 < H(pX) hold, where X is an odd part?
struct SearchCell {
  std::string question;
  /// "p=5", "m=6,p=7" or "p=5,a=5".
  std::string cell;
  CellVerdict verdict = CellVerdict::Inconclusive;
  HBoundResult base;
  HBoundResult with_p;
  std::vector<std::string> notes;
};

struct SearchOptions {
  /// Pollard-Brent iterations per composite; 0 stops after trial division.
  std::uint64_t factor_budget = 200'000;
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
};

struct SearchSummary {
  std::string question;
  std::uint64_t cells = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t non_witnesses = 0;
  std::uint64_t inconclusive = 0;
  std::vector<SearchCell> witness_cells;
  std::vector<SearchCell> inconclusive_cells;
};

using CellSink = std::function<void(const SearchCell&)>;

/// Classifies X = prod of the given factors for prime p. Factors are factored
/// separately; trial division runs first and Pollard-Brent only when the cell
/// is still open.
SearchCell classify_cell(std::string question, std::string cell, const Integer& p, const std::vector<Integer>& factors,
                         const SearchOptions& options);

/// X = p^2 + p + 1 for odd primes p <= p_limit.
SearchSummary search_question1(std::uint64_t p_limit, const SearchOptions& options = {}, const CellSink& sink = {});
/// X = odd(Phi_m(p)) for 1 <= m <= m_limit and odd primes p <= p_limit,
/// cells in (m, p) order.
SearchSummary search_question2(std::uint64_t m_limit, std::uint64_t p_limit, const SearchOptions& options = {},
                               const CellSink& sink = {});
/// X = sigma(p^a) for odd primes p <= p_limit and even 2 <= a <= a_limit,
/// seeded by sigma(p^a) = prod over d | a+1, d > 1 of Phi_d(p). Cells in
/// (p, a) order.
SearchSummary search_question3(std::uint64_t p_limit, std::uint64_t a_limit, const SearchOptions& options = {},
                               const CellSink& sink = {});
/// X = odd(sigma(p^a)) for any a, used for the odd-exponent anchors.
SearchCell sigma_power_cell(std::uint64_t p, std::uint64_t a, const SearchOptions& options = {});
/// The cells (5, 5) and (7, 944).
std::vector<SearchCell> question3_anchors(const SearchOptions& options = {});

/// Hypotheses of the shape-restricted T upper bound that n misses.
std::vector<std::string> prop3_hypothesis_failures(const Factorization& f);

struct Prop3Report {
  std::uint64_t prime_floor = 11;
  /// Candidates tried.
  std::uint64_t attempts = 0;
  /// Sorted by value; each is primitive non-deficient and meets every
  /// hypothesis.
  std::vector<Factorization> witnesses;
  std::vector<BoundCheckRecord> witness_checks;
  /// The printed example 3^2*5*11^2*13^2*17^2*19^2*23^2 and its failures.
  Factorization example;
  bool example_primitive_nondeficient = false;
  std::vector<std::string> example_failures;
  std::string progress;
};

/// Squares consecutive primes from prime_floor (optionally skipping one),
/// then closes the gap to 2 with one prime r to the first power, largest
/// first. budget bounds the number of candidates tried.
Prop3Report search_prop3_witness(std::uint64_t prime_floor = 11, std::uint64_t budget = 5000);

}  // namespace abundancy
