#pragma once

#include <memory>
#include <optional>
#include <string>

#include "abundancy/integer.hpp"
#include "abundancy/interval.hpp"

namespace abundancy {

/// Immutable expression tree over exact rationals with log, exp and
/// rational powers. Cheap to copy (shared nodes).
///
///   RealExpr rhs = log(RealExpr(2)) - Rational(25, 192) + s / 2 - s * s / 4;
class RealExpr {
 public:
  enum class Kind { Constant, Add, Sub, Mul, Div, Neg, Log, Exp, Pow };

  RealExpr(const Rational& q);  // NOLINT(google-explicit-constructor)
  RealExpr(const Integer& n);   // NOLINT(google-explicit-constructor)
  RealExpr(long n);             // NOLINT(google-explicit-constructor)

  Kind kind() const { return node_->kind; }
  /// Constant value (Constant) or exponent (Pow).
  const Rational& value() const { return node_->value; }
  const RealExpr& left() const { return *node_->left; }
  const RealExpr& right() const { return *node_->right; }

  std::string to_string() const;

  friend RealExpr operator+(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator-(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator*(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator/(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator-(const RealExpr& a);
  friend RealExpr log(const RealExpr& a);
  friend RealExpr exp(const RealExpr& a);
  friend RealExpr pow(const RealExpr& base, const Rational& exponent);

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::shared_ptr<const RealExpr> left;
    std::shared_ptr<const RealExpr> right;
  };
  RealExpr(Kind kind, Rational value, std::shared_ptr<const RealExpr> left,
           std::shared_ptr<const RealExpr> right);
  static RealExpr binary(Kind kind, const RealExpr& a, const RealExpr& b);

  std::shared_ptr<const Node> node_;
};

RealExpr log(const RealExpr& a);
RealExpr exp(const RealExpr& a);
RealExpr pow(const RealExpr& base, const Rational& exponent);

/// Syntactic identity of two trees.
bool structurally_equal(const RealExpr& a, const RealExpr& b);

/// Value of a tree that needs no transcendental evaluation, e.g. after
/// simplify() folded everything. Empty when a log/exp/irrational power remains.
std::optional<Rational> exact_value(const RealExpr& e);

/// Constant folding plus a few exact identities: log 1 = 0, exp 0 = 1,
/// rational powers of perfect powers, and log(b^i)/log(b^j) = i/j.
RealExpr simplify(const RealExpr& e);

/// Outward-rounded enclosure of e at the given working precision.
/// Throws DomainError for log of a nonpositive enclosure or division by an
/// enclosure containing 0; std::invalid_argument for precision_bits < 8.
Interval eval_interval(const RealExpr& e, long precision_bits);

}  // namespace abundancy
