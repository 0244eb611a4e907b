#include "abundancy/real_expr.hpp"

#include <stdexcept>
#include <utility>

namespace abundancy {

namespace {

// A = base^e with base not itself a perfect power (A > 1).
std::pair<Integer, unsigned long> perfect_power_base(const Integer& a) {
  const auto bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  Integer root;
  for (unsigned long e = bits; e >= 2; --e) {
    if (mpz_root(root.get_mpz_t(), a.get_mpz_t(), e) != 0) return {root, e};
  }
  return {a, 1};
}

std::optional<Integer> exact_root(const Integer& a, unsigned long k) {
  if (sgn(a) < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

std::optional<Rational> fold_pow(const Rational& base, const Rational& exponent) {
  if (!exponent.get_num().fits_slong_p() || !exponent.get_den().fits_ulong_p()) return std::nullopt;
  const long k = exponent.get_num().get_si();
  const unsigned long root = exponent.get_den().get_ui();
  if (k == 0) return Rational(1);  // x^0 = 1, matching the interval evaluator
  if (base == 0) {
    if (k > 0) return Rational(0);
    return std::nullopt;
  }
  Rational b = base;
  if (root != 1) {
    auto n = exact_root(base.get_num(), root);
    auto d = exact_root(base.get_den(), root);
    if (!n || !d) return std::nullopt;
    b = make_rational(*n, *d);
  }
  const unsigned long mag = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num = ipow(b.get_num(), mag);
  Integer den = ipow(b.get_den(), mag);
  return k < 0 ? make_rational(den, num) : make_rational(num, den);
}

bool is_const(const RealExpr& e) { return e.kind() == RealExpr::Kind::Constant; }

}  // namespace

RealExpr::RealExpr(Kind kind, Rational value, std::shared_ptr<const RealExpr> left,
                   std::shared_ptr<const RealExpr> right)
    : node_(std::make_shared<const Node>(Node{kind, std::move(value), std::move(left), std::move(right)})) {}

RealExpr::RealExpr(const Rational& q) : RealExpr(Kind::Constant, q, nullptr, nullptr) {}
RealExpr::RealExpr(const Integer& n) : RealExpr(Rational(n)) {}
RealExpr::RealExpr(long n) : RealExpr(Rational(n)) {}

RealExpr RealExpr::binary(Kind kind, const RealExpr& a, const RealExpr& b) {
  return RealExpr(kind, Rational(0), std::make_shared<const RealExpr>(a), std::make_shared<const RealExpr>(b));
}

RealExpr operator+(const RealExpr& a, const RealExpr& b) { return RealExpr::binary(RealExpr::Kind::Add, a, b); }
RealExpr operator-(const RealExpr& a, const RealExpr& b) { return RealExpr::binary(RealExpr::Kind::Sub, a, b); }
RealExpr operator*(const RealExpr& a, const RealExpr& b) { return RealExpr::binary(RealExpr::Kind::Mul, a, b); }
RealExpr operator/(const RealExpr& a, const RealExpr& b) { return RealExpr::binary(RealExpr::Kind::Div, a, b); }

RealExpr operator-(const RealExpr& a) {
  return RealExpr(RealExpr::Kind::Neg, Rational(0), std::make_shared<const RealExpr>(a), nullptr);
}

RealExpr log(const RealExpr& a) {
  return RealExpr(RealExpr::Kind::Log, Rational(0), std::make_shared<const RealExpr>(a), nullptr);
}

RealExpr exp(const RealExpr& a) {
  return RealExpr(RealExpr::Kind::Exp, Rational(0), std::make_shared<const RealExpr>(a), nullptr);
}

RealExpr pow(const RealExpr& base, const Rational& exponent) {
  return RealExpr(RealExpr::Kind::Pow, exponent, std::make_shared<const RealExpr>(base), nullptr);
}

std::string RealExpr::to_string() const {
  switch (kind()) {
    case Kind::Constant: {
      std::string s = abundancy::to_string(value());
      return sgn(value()) < 0 || value().get_den() != 1 ? "(" + s + ")" : s;
    }
    case Kind::Add: return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::Sub: return "(" + left().to_string() + " - " + right().to_string() + ")";
    case Kind::Mul: return left().to_string() + "*" + right().to_string();
    case Kind::Div: return left().to_string() + "/" + right().to_string();
    case Kind::Neg: return "-" + left().to_string();
    case Kind::Log: return "log(" + left().to_string() + ")";
    case Kind::Exp: return "exp(" + left().to_string() + ")";
    case Kind::Pow: return left().to_string() + "^(" + abundancy::to_string(value()) + ")";
  }
  return {};
}

bool structurally_equal(const RealExpr& a, const RealExpr& b) {
  if (a.kind() != b.kind()) return false;
  using K = RealExpr::Kind;
  switch (a.kind()) {
    case K::Constant: return a.value() == b.value();
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div:
      return structurally_equal(a.left(), b.left()) && structurally_equal(a.right(), b.right());
    case K::Neg:
    case K::Log:
    case K::Exp:
      return structurally_equal(a.left(), b.left());
    case K::Pow:
      return a.value() == b.value() && structurally_equal(a.left(), b.left());
  }
  return false;
}

std::optional<Rational> exact_value(const RealExpr& e) {
  RealExpr s = simplify(e);
  if (is_const(s)) return s.value();
  return std::nullopt;
}

RealExpr simplify(const RealExpr& e) {
  using K = RealExpr::Kind;
  switch (e.kind()) {
    case K::Constant:
      return e;
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      RealExpr a = simplify(e.left());
      RealExpr b = simplify(e.right());
      if (is_const(a) && is_const(b)) {
        switch (e.kind()) {
          case K::Add: return RealExpr(Rational(a.value() + b.value()));
          case K::Sub: return RealExpr(Rational(a.value() - b.value()));
          case K::Mul: return RealExpr(Rational(a.value() * b.value()));
          default:
            if (b.value() != 0) return RealExpr(Rational(a.value() / b.value()));
            return a / b;
        }
      }
      if (e.kind() == K::Sub && structurally_equal(a, b)) return RealExpr(0L);
      if (e.kind() == K::Div && a.kind() == K::Log && b.kind() == K::Log && is_const(a.left()) &&
          is_const(b.left())) {
        // log(c^i) / log(c^j) = i / j for positive integers sharing a base.
        const Rational& x = a.left().value();
        const Rational& y = b.left().value();
        if (x.get_den() == 1 && y.get_den() == 1 && x > 1 && y > 1) {
          auto [bx, ex] = perfect_power_base(x.get_num());
          auto [by, ey] = perfect_power_base(y.get_num());
          if (bx == by) return RealExpr(make_rational(Integer(ex), Integer(ey)));
        }
      }
      switch (e.kind()) {
        case K::Add: return a + b;
        case K::Sub: return a - b;
        case K::Mul: return a * b;
        default: return a / b;
      }
    }
    case K::Neg: {
      RealExpr a = simplify(e.left());
      if (is_const(a)) return RealExpr(Rational(-a.value()));
      return -a;
    }
    case K::Log: {
      RealExpr a = simplify(e.left());
      if (is_const(a) && a.value() == 1) return RealExpr(0L);
      return log(a);
    }
    case K::Exp: {
      RealExpr a = simplify(e.left());
      if (is_const(a) && a.value() == 0) return RealExpr(1L);
      return exp(a);
    }
    case K::Pow: {
      RealExpr a = simplify(e.left());
      if (is_const(a)) {
        if (auto v = fold_pow(a.value(), e.value())) return RealExpr(*v);
      }
      return pow(a, e.value());
    }
  }
  return e;
}

Interval eval_interval(const RealExpr& e, long precision_bits) {
  if (precision_bits < Interval::kMinPrecision) throw std::invalid_argument("precision_bits must be >= 8");
  const auto bits = static_cast<mpfr_prec_t>(precision_bits);
  using K = RealExpr::Kind;
  switch (e.kind()) {
    case K::Constant: return Interval(e.value(), bits);
    case K::Add: return eval_interval(e.left(), bits) + eval_interval(e.right(), bits);
    case K::Sub: return eval_interval(e.left(), bits) - eval_interval(e.right(), bits);
    case K::Mul: return eval_interval(e.left(), bits) * eval_interval(e.right(), bits);
    case K::Div: return eval_interval(e.left(), bits) / eval_interval(e.right(), bits);
    case K::Neg: return -eval_interval(e.left(), bits);
    case K::Log: return log(eval_interval(e.left(), bits));
    case K::Exp: return exp(eval_interval(e.left(), bits));
    case K::Pow: return pow(eval_interval(e.left(), bits), e.value());
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace abundancy
