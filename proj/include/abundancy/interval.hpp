#pragma once

// Closed intervals with MPFR endpoints rounded outward. Every operation
// returns an enclosure of the exact image of its operands.

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "abundancy/integer.hpp"

namespace abundancy {

/// Raised for log of a nonpositive enclosure, division by an enclosure that
/// contains zero, and similar.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Interval {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 8;

  /// [0, 0] at 64 bits.
  Interval();
  /// Tightest enclosure of q at the given precision.
  Interval(const Rational& q, mpfr_prec_t bits);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  /// Exact endpoint values.
  Rational lo_exact() const;
  Rational hi_exact() const;
  Rational width() const { return hi_exact() - lo_exact(); }

  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool is_subset_of(const Interval& other) const;

  /// Decimal endpoints, rounded outward so the printed interval still
  /// encloses the true value.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  // Builders used by the free functions below.
  static Interval empty_at(mpfr_prec_t bits);
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

 private:
  explicit Interval(mpfr_prec_t bits);
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval log(const Interval& x);
Interval log1p(const Interval& x);
Interval exp(const Interval& x);
/// x^r. Non-integer r needs x >= 0; negative r needs 0 outside x.
Interval pow(const Interval& x, const Rational& r);

/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

/// Interval with lower endpoint lo and upper endpoint hi (lo <= hi).
Interval span_of(const Rational& lo, const Rational& hi, mpfr_prec_t bits);

}  // namespace abundancy
