#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "abundancy/integer.hpp"
#include "abundancy/interval.hpp"
#include "abundancy/real_expr.hpp"

namespace abundancy {

enum class Relation { Less, LessEqual, Greater, GreaterEqual };
enum class Verdict { Holds, Fails, Undecided };

std::string_view to_string(Relation r);
std::string_view to_string(Verdict v);

inline constexpr long kDefaultPrecisionCap = 1L << 14;
inline constexpr long kStartPrecision = 64;

/// Outcome of checking "lhs rel rhs".
///
/// Holds and Fails are certificates: the enclosures at precision_bits are
/// disjoint (or the comparison was decided exactly, precision_bits == 0).
/// Undecided means the enclosures still overlapped at the precision cap.
struct CheckResult {
  Verdict verdict = Verdict::Undecided;
  Relation relation = Relation::Less;
  Interval lhs;
  Interval rhs;
  long precision_bits = 0;
  std::string witness;
  /// The exact sides when the comparison was decided without intervals.
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::Fails; }
};

/// Decides a relation from two enclosures; Undecided while they overlap.
Verdict decide(const Interval& lhs, Relation rel, const Interval& rhs);

/// Certified comparison. Starts at 64 bits and doubles until the enclosures
/// separate or precision_cap is reached. Structurally identical sides and
/// sides that simplify to exact rationals are decided without intervals.
/// Propagates DomainError from evaluation.
CheckResult compare_certified(const RealExpr& lhs, Relation rel, const RealExpr& rhs,
                              long precision_cap = kDefaultPrecisionCap, std::string witness = {});

/// Same contract for two exact values.
CheckResult compare_exact(const Rational& lhs, Relation rel, const Rational& rhs,
                          std::string witness = {});

}  // namespace abundancy
