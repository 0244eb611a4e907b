#include "abundancy/certify.hpp"

#include <algorithm>
#include <utility>

namespace abundancy {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

bool exact_relation(const Rational& a, Relation rel, const Rational& b) {
  switch (rel) {
    case Relation::Less: return a < b;
    case Relation::LessEqual: return a <= b;
    case Relation::Greater: return a > b;
    case Relation::GreaterEqual: return a >= b;
  }
  return false;
}

}  // namespace

Verdict decide(const Interval& lhs, Relation rel, const Interval& rhs) {
  // Normalize to lhs < rhs / lhs <= rhs by swapping sides.
  const Interval* a = &lhs;
  const Interval* b = &rhs;
  if (rel == Relation::Greater || rel == Relation::GreaterEqual) std::swap(a, b);
  if (is_strict(rel)) {
    if (mpfr_less_p(a->hi(), b->lo())) return Verdict::Holds;
    if (mpfr_greaterequal_p(a->lo(), b->hi())) return Verdict::Fails;
  } else {
    if (mpfr_lessequal_p(a->hi(), b->lo())) return Verdict::Holds;
    if (mpfr_greater_p(a->lo(), b->hi())) return Verdict::Fails;
  }
  return Verdict::Undecided;
}

CheckResult compare_exact(const Rational& lhs, Relation rel, const Rational& rhs, std::string witness) {
  CheckResult r;
  r.relation = rel;
  r.verdict = exact_relation(lhs, rel, rhs) ? Verdict::Holds : Verdict::Fails;
  r.lhs = Interval(lhs, kStartPrecision);
  r.rhs = Interval(rhs, kStartPrecision);
  r.precision_bits = 0;
  r.witness = std::move(witness);
  r.lhs_exact = lhs;
  r.rhs_exact = rhs;
  return r;
}

CheckResult compare_certified(const RealExpr& lhs, Relation rel, const RealExpr& rhs, long precision_cap,
                              std::string witness) {
  precision_cap = std::max<long>(precision_cap, Interval::kMinPrecision);
  RealExpr a = simplify(lhs);
  RealExpr b = simplify(rhs);

  if (structurally_equal(lhs, rhs) || structurally_equal(a, b)) {
    CheckResult r;
    r.relation = rel;
    r.verdict = is_strict(rel) ? Verdict::Fails : Verdict::Holds;
    r.lhs = eval_interval(a, kStartPrecision);
    r.rhs = r.lhs;
    r.precision_bits = 0;
    r.witness = std::move(witness);
    return r;
  }
  if (a.kind() == RealExpr::Kind::Constant && b.kind() == RealExpr::Kind::Constant) {
    return compare_exact(a.value(), rel, b.value(), std::move(witness));
  }

  CheckResult r;
  r.relation = rel;
  r.witness = std::move(witness);
  long bits = std::min(kStartPrecision, precision_cap);
  for (;;) {
    r.lhs = eval_interval(a, bits);
    r.rhs = eval_interval(b, bits);
    r.precision_bits = bits;
    r.verdict = decide(r.lhs, rel, r.rhs);
    if (r.verdict != Verdict::Undecided || bits >= precision_cap) break;
    bits = std::min(bits * 2, precision_cap);
  }
  return r;
}

}  // namespace abundancy
