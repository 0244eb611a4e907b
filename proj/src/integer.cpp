#include "abundancy/integer.hpp"

#include <stdexcept>

namespace abundancy {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint64_t to_u64(const Integer& n) {
  if (!fits_u64(n)) throw std::overflow_error("integer does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u64(std::uint64_t v) {
  Integer n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return n;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer odd_part(const Integer& n) {
  if (n <= 0) throw std::domain_error("odd_part requires n > 0");
  Integer r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), mpz_scan1(n.get_mpz_t(), 0));
  return r;
}

unsigned long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer r;
  return mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace abundancy
