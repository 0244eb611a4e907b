#include "abundancy/candidate.hpp"

#include <sstream>

#include "abundancy/primes.hpp"

namespace abundancy {

namespace {

Rational decimal(const char* text) {
  // "0.667450" -> 667450/10^6
  std::string s(text);
  const auto dot = s.find('.');
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return make_rational(Integer(digits, 10), ipow(10, s.size() - dot - 1));
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Holds: return Status::Holds;
    case Verdict::Fails: return Status::Fails;
    case Verdict::Undecided: return Status::Undecided;
  }
  return Status::Undecided;
}

unsigned long mod_ui(const Integer& x, unsigned long m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

bool divides(unsigned long d, const Integer& n) { return mod_ui(n, d) == 0; }

class Builder {
 public:
  explicit Builder(long cap) : cap_(cap) {}

  void skip(std::string_view id, std::string note) {
    out.push_back({std::string(id), Status::Skipped, std::nullopt, std::move(note)});
  }
  void flag(std::string_view id, bool holds, std::string note) {
    out.push_back({std::string(id), holds ? Status::Holds : Status::Fails, std::nullopt, std::move(note)});
  }
  void exact(std::string_view id, const Rational& lhs, Relation rel, const Rational& rhs, std::string note) {
    CheckResult r = compare_exact(lhs, rel, rhs);
    out.push_back({std::string(id), status_of(r.verdict), std::move(r), std::move(note)});
  }
  void real(std::string_view id, const RealExpr& lhs, Relation rel, const RealExpr& rhs, std::string note) {
    CheckResult r = compare_certified(lhs, rel, rhs, cap_);
    out.push_back({std::string(id), status_of(r.verdict), std::move(r), std::move(note)});
  }

  std::vector<ConstraintOutcome> out;

 private:
  long cap_;
};

struct SpecialSearch {
  std::optional<std::size_t> index;
  std::string problem;
};

bool special_shape(const SpoofTerm& t) { return mod_ui(t.base, 4) == 1 && t.exponent % 4 == 1; }

SpecialSearch find_special(const SpoofFactorization& sf, const std::optional<SpoofTerm>& designated) {
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < sf.size(); ++i) {
    if (sf.terms()[i].exponent % 2 == 1) odd.push_back(i);
  }
  if (designated) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < sf.size(); ++i) {
      if (sf.terms()[i] == *designated) at = i;
    }
    if (!at) return {std::nullopt, "designated special pair is not in the factorization"};
    if (!special_shape(*designated)) return {at, "designated special pair fails q = e = 1 (mod 4)"};
    if (odd.size() != 1 || odd[0] != *at) return {at, "some other exponent is odd"};
    return {at, {}};
  }
  if (odd.empty()) return {std::nullopt, "no odd exponent, so no special pair"};
  if (odd.size() > 1) return {std::nullopt, "ambiguous special pair: " + std::to_string(odd.size()) + " odd exponents"};
  if (!special_shape(sf.terms()[odd[0]])) return {odd[0], "the only odd-exponent pair fails q = e = 1 (mod 4)"};
  return {odd[0], {}};
}

std::string pair_text(const SpoofTerm& t) { return "(" + t.base.get_str() + "," + std::to_string(t.exponent) + ")"; }

}  // namespace

std::string_view to_string(CandidateVerdict v) { return v == CandidateVerdict::Refuted ? "Refuted" : "Consistent"; }

const ConstraintOutcome* CandidateReport::find(std::string_view id) const {
  for (const auto& o : outcomes) {
    if (o.constraint_id == id) return &o;
  }
  return nullptr;
}

CandidateVerdict verdict_of(const std::vector<ConstraintOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (o.status == Status::Fails) return CandidateVerdict::Refuted;
  }
  return CandidateVerdict::Consistent;
}

const std::array<Gcd15Row, 4>& gcd15_table() {
  static const std::array<Gcd15Row, 4> table = {{
      {1, decimal("0.667450"), decimal("0.693148"), decimal("2.014754")},
      {3, decimal("0.603831"), decimal("0.657304"), decimal("2.096234")},
      {5, decimal("0.647387"), decimal("0.678036"), decimal("2.031002")},
      {15, decimal("0.596063"), decimal("0.673770"), decimal("2.165439")},
  }};
  return table;
}

const Gcd15Row& gcd15_row(const Integer& n) {
  const bool by3 = divides(3, n), by5 = divides(5, n);
  return gcd15_table()[(by3 ? 1 : 0) + (by5 ? 2 : 0)];
}

std::string gcd15_table_text() {
  std::ostringstream os;
  os << "Bounds for an odd perfect number n by gcd(15, n)\n"
     << "T(n) bounds: Cohen; Hagis and Suryanarayana. H(n) upper bounds: Suryanarayana.\n"
     << "gcd  T lower   T upper   H upper\n";
  const char* rows[4][4] = {{"1", "0.667450", "0.693148", "2.014754"},
                            {"3", "0.603831", "0.657304", "2.096234"},
                            {"5", "0.647387", "0.678036", "2.031002"},
                            {"15", "0.596063", "0.673770", "2.165439"}};
  for (const auto& r : rows) {
    os << r[0] << std::string(5 - std::string(r[0]).size(), ' ') << r[1] << "  " << r[2] << "  " << r[3] << '\n';
  }
  os << "T upper for gcd 1 is log 2 rounded up. H values are rounded up, so <= tests against them are sound.\n";
  return os.str();
}

CandidateReport opn_candidate_report(const SpoofFactorization& sf, const CandidateOptions& options) {
  CandidateReport report;
  report.input = sf;
  report.value = sf.value();
  report.warnings = sf.warnings();
  Builder b(options.precision_cap);
  const Integer& n = report.value;
  const bool formal = sf.formal_primes();

  b.flag(constraint_id::kFormalPrimes, formal,
         formal ? "bases distinct and > 1" : "bases must be distinct and > 1 to stand in for primes");

  if (!options.verify_primality) {
    b.skip(constraint_id::kPrimality, "not requested");
  } else if (!formal) {
    b.skip(constraint_id::kPrimality, "needs formal-primes");
  } else {
    std::string composite;
    for (const auto& t : sf) {
      if (!is_prime(t.base)) {
        composite = t.base.get_str();
        break;
      }
    }
    b.flag(constraint_id::kPrimality, composite.empty(), composite.empty() ? "every base is prime" : composite + " is composite");
  }

  b.flag(constraint_id::kOdd, mod_ui(n, 2) == 1, "value " + std::string(mod_ui(n, 2) == 1 ? "odd" : "even"));
  {
    const Integer st = sigma_tilde(sf);
    b.flag(constraint_id::kSpoofPerfect, st == 2 * n, "sigma~ = " + st.get_str() + ", 2n = " + Integer(2 * n).get_str());
  }

  const SpecialSearch special = find_special(sf, options.special);
  if (special.problem.empty()) {
    report.special = special.index;
    b.flag(constraint_id::kEulerForm, true, "special pair " + pair_text(sf.terms()[*special.index]) + ", other exponents even");
  } else {
    b.flag(constraint_id::kEulerForm, false, special.problem);
  }

  b.flag(constraint_id::kNot105, !divides(105, n), divides(105, n) ? "105 | n; H(105) = 35/16 > 2" : "105 does not divide n");
  b.flag(constraint_id::kNot3_5_11_13, !divides(2145, n),
         divides(2145, n) ? "3*5*11*13 | n" : "3*5*11*13 does not divide n");

  if (!report.special) {
    b.skip(constraint_id::kSpecialMod165, "no special pair");
  } else {
    const Integer& q = sf.terms()[*report.special].base;
    const bool bad = mod_ui(q, 165) == 164;
    b.flag(constraint_id::kSpecialMod165, !bad, "q mod 165 = " + std::to_string(mod_ui(q, 165)));
  }

  if (!divides(165, n)) {
    b.skip(constraint_id::kFiveExactly, "hypothesis 165 | n not met");
  } else {
    const unsigned long v5 = valuation(n, 5);
    b.flag(constraint_id::kFiveExactly, v5 == 1, "5-adic valuation " + std::to_string(v5));
  }

  // Analytic constraints read the bases as the distinct primes of n.
  if (!formal || sf.size() == 0) {
    for (auto id : {constraint_id::kTableTLower, constraint_id::kTableTUpper, constraint_id::kTableH, constraint_id::kHUpper,
                    constraint_id::kTUpper, constraint_id::kSUpper, constraint_id::kAcquaahKonyagin,
                    constraint_id::kLargestSquare, constraint_id::kSecondLargest, constraint_id::kTopTwo,
                    constraint_id::kDris, constraint_id::kDrisRefined, constraint_id::kServais}) {
      b.skip(id, formal ? "empty factorization" : "needs formal-primes");
    }
  } else {
    const SpoofFactorization sorted = sf.sorted();
    const auto& terms = sorted.terms();
    Rational T = 0, H = 1;
    for (const auto& t : terms) {
      T += make_rational(Integer(1), t.base);
      H *= make_rational(t.base, t.base - 1);
    }
    const Rational S = H - 2;
    const Integer& p1 = terms.front().base;
    const Integer& pk = terms.back().base;
    const Integer k(static_cast<unsigned long>(terms.size()));
    const Gcd15Row& row = gcd15_row(n);
    const std::string g = "gcd(15, n) = " + std::to_string(row.gcd);

    b.exact(constraint_id::kTableTLower, T, Relation::GreaterEqual, row.t_lower, g);
    b.exact(constraint_id::kTableTUpper, T, Relation::LessEqual, row.t_upper, g);
    b.exact(constraint_id::kTableH, H, Relation::LessEqual, row.h_upper, g);
    b.exact(constraint_id::kHUpper, H, Relation::LessEqual, 2 + make_rational(Integer(9), Integer(4 * p1 * p1)), "p1 = " + p1.get_str());

    if (p1 < 11) {
      b.skip(constraint_id::kTUpper, "hypothesis p1>=11 not met");
      b.skip(constraint_id::kSUpper, "hypothesis p1>=11 not met");
    } else {
      b.real(constraint_id::kTUpper, RealExpr(T), Relation::Less,
             log(RealExpr(2L)) - RealExpr(make_rational(Integer(11), Integer(50 * p1 * p1))), "p1 = " + p1.get_str());
      b.real(constraint_id::kSUpper, RealExpr(S), Relation::Less,
             RealExpr(make_rational(Integer(25), Integer(8 * p1))) / log(RealExpr(p1)), "p1 = " + p1.get_str());
    }

    b.exact(constraint_id::kAcquaahKonyagin, Rational(ipow(pk, 3)), Relation::Less, Rational(3 * n), "p_k = " + pk.get_str());
    b.exact(constraint_id::kLargestSquare, Rational(pk * pk), Relation::Less, Rational(2 * n), "p_k = " + pk.get_str());
    if (terms.size() < 2) {
      b.skip(constraint_id::kSecondLargest, "hypothesis k>=2 not met");
      b.skip(constraint_id::kTopTwo, "hypothesis k>=2 not met");
    } else {
      const Integer& pk1 = terms[terms.size() - 2].base;
      b.exact(constraint_id::kSecondLargest, Rational(ipow(pk1, 5)), Relation::Less, Rational(2 * n), "p_{k-1} = " + pk1.get_str());
      b.exact(constraint_id::kTopTwo, Rational(ipow(pk * pk1, 4)), Relation::Less, Rational(6 * n * n),
              "p_k p_{k-1} = " + Integer(pk * pk1).get_str());
    }

    const SpoofTerm* q = report.special ? &sf.terms()[*report.special] : nullptr;
    if (!q || q->exponent == 1) {
      const std::string why = q ? "special exponent e = 1" : "no special pair";
      b.skip(constraint_id::kDris, why);
      b.skip(constraint_id::kDrisRefined, why);
    } else {
      const Integer m2 = n / ipow(q->base, q->exponent);
      const Integer q5 = ipow(q->base, 5);
      b.exact(constraint_id::kDris, Rational(q5), Relation::Less, Rational(2 * m2), "q^5 < 2m^2");
      b.exact(constraint_id::kDrisRefined, Rational(q5 * 9 * 25 * 121 * 169), Relation::Less, Rational(2 * m2),
              "q^5 (3^2 5^2 11^2 13^2) < 2m^2");
    }

    b.exact(constraint_id::kServais, Rational(p1), Relation::LessEqual, Rational(k), "p1 <= k");
  }

  report.outcomes = std::move(b.out);
  report.verdict = verdict_of(report.outcomes);
  for (const auto& o : report.outcomes) {
    if (o.status == Status::Fails) report.refuted_by.push_back(o.constraint_id);
  }
  return report;
}

}  // namespace abundancy
