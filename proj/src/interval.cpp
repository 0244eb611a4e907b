#include "abundancy/interval.hpp"

#include <algorithm>
#include <array>

namespace abundancy {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

std::string endpoint_string(mpfr_srcptr v, int digits, bool round_up) {
  char* buf = nullptr;
  if (mpfr_zero_p(v)) return "0";
  mpfr_asprintf(&buf, round_up ? "%.*RUe" : "%.*RDe", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Applies op to every endpoint pair, keeping the outward-rounded extremes.
template <typename Op>
Interval corners(const Interval& a, const Interval& b, Op op) {
  Interval out = Interval::empty_at(join_prec(a, b));
  mpfr_t t;
  mpfr_init2(t, out.precision());
  const std::array<mpfr_srcptr, 2> xa{a.lo(), a.hi()};
  const std::array<mpfr_srcptr, 2> xb{b.lo(), b.hi()};
  bool first = true;
  for (auto x : xa) {
    for (auto y : xb) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo())) mpfr_set(out.lo_mut(), t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi())) mpfr_set(out.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval pow_uint(const Interval& x, unsigned long k) {
  Interval out = Interval::empty_at(x.precision());
  if (k == 0) {
    mpfr_set_ui(out.lo_mut(), 1, MPFR_RNDD);
    mpfr_set_ui(out.hi_mut(), 1, MPFR_RNDU);
    return out;
  }
  const bool even = (k % 2) == 0;
  mpfr_t a, b;
  mpfr_init2(a, x.precision());
  mpfr_init2(b, x.precision());
  if (mpfr_sgn(x.lo()) >= 0) {
    mpfr_pow_ui(out.lo_mut(), x.lo(), k, MPFR_RNDD);
    mpfr_pow_ui(out.hi_mut(), x.hi(), k, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_neg(a, x.hi(), MPFR_RNDN);  // |hi|, exact
    mpfr_neg(b, x.lo(), MPFR_RNDN);  // |lo|, exact
    if (even) {
      mpfr_pow_ui(out.lo_mut(), a, k, MPFR_RNDD);
      mpfr_pow_ui(out.hi_mut(), b, k, MPFR_RNDU);
    } else {
      mpfr_pow_ui(out.lo_mut(), b, k, MPFR_RNDU);
      mpfr_neg(out.lo_mut(), out.lo(), MPFR_RNDN);
      mpfr_pow_ui(out.hi_mut(), a, k, MPFR_RNDD);
      mpfr_neg(out.hi_mut(), out.hi(), MPFR_RNDN);
    }
  } else {
    mpfr_neg(b, x.lo(), MPFR_RNDN);
    if (even) {
      mpfr_set_ui(out.lo_mut(), 0, MPFR_RNDD);
      mpfr_max(a, b, x.hi(), MPFR_RNDN);
      mpfr_pow_ui(out.hi_mut(), a, k, MPFR_RNDU);
    } else {
      mpfr_pow_ui(out.lo_mut(), b, k, MPFR_RNDU);
      mpfr_neg(out.lo_mut(), out.lo(), MPFR_RNDN);
      mpfr_pow_ui(out.hi_mut(), x.hi(), k, MPFR_RNDU);
    }
  }
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

Interval reciprocal(const Interval& x) {
  Interval one(Rational(1), x.precision());
  return one / x;
}

}  // namespace

Interval::Interval(mpfr_prec_t bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Interval::Interval() : Interval(mpfr_prec_t{64}) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t bits) : Interval(std::max(bits, kMinPrecision)) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDN);
  mpfr_set(hi_, other.hi_, MPFR_RNDN);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDN);
    mpfr_set(hi_, other.hi_, MPFR_RNDN);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::empty_at(mpfr_prec_t bits) { return Interval(std::max(bits, kMinPrecision)); }

Rational Interval::lo_exact() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::hi_exact() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_subset_of(const Interval& other) const {
  return mpfr_greaterequal_p(lo_, other.lo_) && mpfr_lessequal_p(hi_, other.hi_);
}

std::string Interval::lo_string(int digits) const { return endpoint_string(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return endpoint_string(hi_, digits, true); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval out = Interval::empty_at(join_prec(a, b));
  mpfr_add(out.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(out.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out = Interval::empty_at(join_prec(a, b));
  mpfr_sub(out.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(out.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a) {
  Interval out = Interval::empty_at(a.precision());
  mpfr_neg(out.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_neg(out.hi_mut(), a.lo(), MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  return corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t m) {
    mpfr_mul(r, x, y, m);
  });
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero");
  return corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t m) {
    mpfr_div(r, x, y, m);
  });
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("log of a nonpositive interval");
  Interval out = Interval::empty_at(x.precision());
  mpfr_log(out.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(out.hi_mut(), x.hi(), MPFR_RNDU);
  return out;
}

Interval log1p(const Interval& x) {
  mpfr_t m1;
  mpfr_init2(m1, 2);
  mpfr_set_si(m1, -1, MPFR_RNDN);
  const bool bad = mpfr_lessequal_p(x.lo(), m1);
  mpfr_clear(m1);
  if (bad) throw DomainError("log1p of an interval reaching -1");
  Interval out = Interval::empty_at(x.precision());
  mpfr_log1p(out.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log1p(out.hi_mut(), x.hi(), MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out = Interval::empty_at(x.precision());
  mpfr_exp(out.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(out.hi_mut(), x.hi(), MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, const Rational& r) {
  if (r == 0) return Interval(Rational(1), x.precision());
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  const Integer mag = abs(num);
  if (!mag.fits_ulong_p() || !den.fits_ulong_p()) throw DomainError("exponent too large");
  const unsigned long k = mag.get_ui();
  const unsigned long root = den.get_ui();

  Interval out;
  if (root == 1) {
    out = pow_uint(x, k);
  } else {
    if (mpfr_sgn(x.lo()) < 0) throw DomainError("fractional power of a negative interval");
    Interval powered = pow_uint(x, k);
    out = Interval::empty_at(x.precision());
    mpfr_rootn_ui(out.lo_mut(), powered.lo(), root, MPFR_RNDD);
    mpfr_rootn_ui(out.hi_mut(), powered.hi(), root, MPFR_RNDU);
  }
  if (sgn(num) < 0) out = reciprocal(out);
  return out;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval out = Interval::empty_at(join_prec(a, b));
  mpfr_min(out.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(out.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

Interval span_of(const Rational& lo, const Rational& hi, mpfr_prec_t bits) {
  if (lo > hi) throw std::invalid_argument("span_of requires lo <= hi");
  Interval out = Interval::empty_at(bits);
  mpfr_set_q(out.lo_mut(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_mut(), hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

}  // namespace abundancy
