#include "abundancy/spoof.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace abundancy {

SpoofFactorization::SpoofFactorization(std::vector<SpoofTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.base == 0) throw std::invalid_argument("spoof base must be nonzero");
    if (t.exponent == 0) throw std::invalid_argument("spoof exponent must be >= 1");
  }
}

SpoofFactorization SpoofFactorization::from(const Factorization& f) {
  std::vector<SpoofTerm> terms;
  for (const auto& t : f) terms.push_back({t.prime, t.exponent});
  return SpoofFactorization(std::move(terms));
}

Integer SpoofFactorization::value() const {
  Integer v = 1;
  for (const auto& t : terms_) v *= ipow(t.base, t.exponent);
  return v;
}

bool SpoofFactorization::formal_primes() const {
  std::set<Integer> seen;
  for (const auto& t : terms_) {
    if (t.base <= 1 || !seen.insert(t.base).second) return false;
  }
  return true;
}

SpoofFactorization SpoofFactorization::sorted() const {
  auto terms = terms_;
  std::stable_sort(terms.begin(), terms.end(), [](const SpoofTerm& a, const SpoofTerm& b) { return a.base < b.base; });
  return SpoofFactorization(std::move(terms));
}

std::optional<Factorization> SpoofFactorization::as_factorization() const {
  if (!formal_primes()) return std::nullopt;
  std::vector<PrimePower> pp;
  for (const auto& t : sorted()) {
    if (!is_prime(t.base)) return std::nullopt;
    pp.push_back({t.base, t.exponent});
  }
  return Factorization(std::move(pp));
}

std::string SpoofFactorization::to_string() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '*';
    s += sgn(t.base) < 0 ? "(" + t.base.get_str() + ")" : t.base.get_str();
    if (t.exponent != 1) s += '^' + std::to_string(t.exponent);
  }
  return s;
}

std::string SpoofFactorization::to_json() const {
  std::string s = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ',';
    s += "[" + terms_[i].base.get_str() + "," + std::to_string(terms_[i].exponent) + "]";
  }
  return s + "]";
}

std::vector<std::string> SpoofFactorization::warnings() const {
  std::vector<std::string> w;
  for (const auto& t : terms_) {
    if (t.base == 1 || t.base == -1) {
      w.push_back("base " + t.base.get_str() + " makes the spoof degenerate");
    }
  }
  return w;
}

Integer sigma_tilde(const SpoofFactorization& sf) {
  Integer total = 1;
  for (const auto& t : sf) {
    Integer sum = 0, power = 1;
    for (unsigned long j = 0; j <= t.exponent; ++j) {
      sum += power;
      power *= t.base;
    }
    total *= sum;
  }
  return total;
}

bool is_spoof_perfect(const SpoofFactorization& sf) { return sigma_tilde(sf) == 2 * sf.value(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<SpoofTerm> terms() {
    std::vector<SpoofTerm> out;
    skip_ws();
    if (at_end()) fail("empty factorization");
    for (;;) {
      SpoofTerm t;
      t.base = base();
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        Integer e = unsigned_integer();
        if (!e.fits_ulong_p() || e == 0) fail("exponent out of range");
        t.exponent = e.get_ui();
      }
      out.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
      skip_ws();
    }
    return out;
  }

 private:
  Integer base() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      bool negative = false;
      if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
      skip_ws();
      Integer v = unsigned_integer();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return negative ? Integer(-v) : v;
    }
    if (peek() == '-') fail("negative bases must be parenthesized");
    return unsigned_integer();
  }

  Integer unsigned_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad factorization '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Integer json_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? from_u64(j.get<std::uint64_t>()) : Integer(j.get<long>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer in JSON factorization");
}

std::vector<SpoofTerm> parse_json_terms(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON factorization: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("JSON factorization must be an array of [x,b] pairs");
  std::vector<SpoofTerm> out;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("JSON factorization entries must be [x,b]");
    Integer b = json_integer(pair[1]);
    if (b < 1 || !b.fits_ulong_p()) throw std::invalid_argument("JSON exponent out of range");
    out.push_back({json_integer(pair[0]), b.get_ui()});
  }
  return out;
}

}  // namespace

SpoofFactorization parse_spoof(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return SpoofFactorization(parse_json_terms(text));
  return SpoofFactorization(Parser(text).terms());
}

Factorization parse_factorization(std::string_view text, const FactorOptions& options) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw std::invalid_argument("empty input");
  const std::string_view body = text.substr(first, last - first + 1);
  if (body.find_first_not_of("0123456789") == std::string_view::npos) {
    Integer n = parse_integer(body);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return factorize(n, options);
  }
  SpoofFactorization sf = parse_spoof(body);
  std::vector<PrimePower> pp;
  for (const auto& t : sf) {
    if (t.base < 2 || !is_prime(t.base)) throw std::invalid_argument("not a prime base: " + t.base.get_str());
    pp.push_back({t.base, t.exponent});
  }
  return Factorization::from_trusted(std::move(pp));
}

}  // namespace abundancy
