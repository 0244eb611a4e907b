#include "abundancy/report.hpp"

#include <sstream>
#include <stdexcept>

#include "abundancy/divisor_functions.hpp"

namespace abundancy {

namespace {

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string lo_text(const CheckResult& r, bool left) {
  const auto& exact = left ? r.lhs_exact : r.rhs_exact;
  if (exact) return to_string(*exact);
  return (left ? r.lhs : r.rhs).lo_string(20);
}

std::string hi_text(const CheckResult& r, bool left) {
  const auto& exact = left ? r.lhs_exact : r.rhs_exact;
  if (exact) return to_string(*exact);
  return (left ? r.lhs : r.rhs).hi_string(20);
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "jsonl") return Format::Jsonl;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Json integer_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return Json(n.get_si());
  return Json(n.get_str());
}

Json compute_json(const Factorization& f) {
  Json j;
  j["n"] = integer_json(f.value());
  j["factorization"] = f.to_string();
  j["sigma"] = integer_json(sigma(f));
  j["h"] = to_string(abundancy_index(f));
  j["H"] = to_string(abundancy_limit(f));
  j["T"] = to_string(prime_reciprocal_sum(f));
  j["S"] = to_string(surplus(f));
  j["D"] = integer_json(arithmetic_derivative(f));
  j["nT"] = integer_json(sum_n_over_p(f));
  j["classification"] = std::string(to_string(classify(f)));
  j["primitive_nondeficient"] = is_primitive_nondeficient(f);
  return j;
}

std::string compute_text(const Factorization& f) {
  const Json j = compute_json(f);
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return os.str();
}

Json to_json(const BoundCheckRecord& r) {
  Json j;
  j["bound_id"] = r.bound_id;
  const auto space = r.input.find(' ');
  const std::string head = r.input.substr(0, space);
  if (all_digits(head)) {
    j["n"] = integer_json(Integer(head, 10));
    j["param"] = space == std::string::npos ? Json(nullptr) : Json(r.input.substr(space + 1));
  } else {
    j["n"] = nullptr;
    j["param"] = r.input;
  }
  j["verdict"] = std::string(to_string(r.status));
  if (r.result) {
    j["lhs_lo"] = lo_text(*r.result, true);
    j["lhs_hi"] = hi_text(*r.result, true);
    j["rhs_lo"] = lo_text(*r.result, false);
    j["rhs_hi"] = hi_text(*r.result, false);
    j["precision_bits"] = r.result->precision_bits;
  } else {
    for (const char* k : {"lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi", "precision_bits"}) j[k] = nullptr;
  }
  j["hypothesis_failures"] = strings(r.hypothesis_failures);
  j["flags"] = strings(r.flags);
  j["empirical"] = r.empirical;
  j["witness"] = r.result && !r.result->witness.empty() ? Json(r.result->witness) : Json(nullptr);
  return j;
}

std::string to_text(const BoundCheckRecord& r) {
  std::ostringstream os;
  os << r.bound_id << ' ' << r.input << ": " << to_string(r.status);
  if (r.result) {
    os << "  lhs [" << lo_text(*r.result, true) << ", " << hi_text(*r.result, true) << "] " << to_string(r.result->relation)
       << " rhs [" << lo_text(*r.result, false) << ", " << hi_text(*r.result, false) << "] at "
       << r.result->precision_bits << " bits";
  }
  if (!r.hypothesis_failures.empty()) os << "  unmet: " << join(r.hypothesis_failures, ",");
  if (!r.flags.empty()) os << "  flags: " << join(r.flags, ",");
  if (r.empirical) os << "  (empirical)";
  return os.str();
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["records"] = s.records;
  j["holds"] = s.holds;
  j["fails"] = s.fails;
  j["undecided"] = s.undecided;
  j["skipped"] = s.skipped;
  j["violations"] = s.violations;
  j["empirical_fails"] = s.empirical_fails;
  return j;
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  os << s.records << " records: " << s.holds << " Holds, " << s.fails << " Fails (" << s.violations << " violations, "
     << s.empirical_fails << " empirical), " << s.undecided << " Undecided, " << s.skipped << " Skipped";
  return os.str();
}

Json to_json(const LemmaReport& r) {
  Json j = to_json(to_record(r));
  j["domain"] = r.domain;
  j["checked"] = r.checked;
  j["holds"] = r.holds;
  j["fails"] = r.fails;
  j["undecided"] = r.undecided;
  j["tightest_input"] = r.tightest_input;
  j["detail"] = r.detail;
  return j;
}

std::string to_text(const LemmaReport& r) {
  std::ostringstream os;
  os << r.lemma_id << " over " << r.domain << ": " << to_string(r.verdict) << " (" << r.checked << " checked, " << r.fails
     << " Fails, " << r.undecided << " Undecided)";
  if (!r.tightest_input.empty()) os << "  tightest " << r.tightest_input;
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

Json to_json(const SpecialsReport& r) {
  Json j;
  j["bound_id"] = "prop.no-tricky-specials";
  j["q_limit"] = r.q_limit;
  j["only_1_mod_4"] = r.only_1_mod_4;
  j["verdict"] = r.ok() ? "Holds" : "Fails";
  j["scanned"] = r.scanned;
  Json w = Json::array();
  for (auto q : r.witnesses) w.push_back(q);
  j["witnesses"] = w;
  j["triggering"] = r.triggering;
  j["lemma_failures"] = r.lemma_failures;
  j["below_two"] = r.below_two;
  j["closest"] = to_string(r.closest);
  j["closest_q"] = r.closest_q;
  j["notes"] = strings({"odd primes only; q = 2 gives H(3) = 3/2 < 2 < H(6) = 3"});
  return j;
}

std::string to_text(const SpecialsReport& r) {
  std::ostringstream os;
  os << "prop.no-tricky-specials q <= " << r.q_limit << (r.only_1_mod_4 ? " (q = 1 mod 4)" : "") << ": "
     << (r.ok() ? "Holds" : "Fails") << " (" << r.scanned << " primes, " << r.witnesses.size() << " witnesses, "
     << r.triggering << " triggering, " << r.lemma_failures << " lemma failures; closest H(q odd(q+1)) = "
     << to_string(r.closest) << " at q = " << r.closest_q << ")";
  return os.str();
}

Json to_json(const CEstimate& c) {
  Json j;
  j["bound_id"] = "estimate.C";
  j["value"] = to_string(c.value);
  j["attained_at"] = c.attained_at;
  return j;
}

Json to_json(const SearchCell& c) {
  Json j;
  j["question"] = c.question;
  j["cell"] = c.cell;
  j["verdict"] = std::string(to_string(c.verdict));
  j["h_lower_num"] = integer_json(c.base.lower.get_num());
  j["h_lower_den"] = integer_json(c.base.lower.get_den());
  j["complete"] = c.base.complete;
  j["h_verdict"] = std::string(to_string(c.base.verdict));
  j["hp_lower"] = to_string(c.with_p.lower);
  j["hp_verdict"] = std::string(to_string(c.with_p.verdict));
  j["notes"] = strings(c.notes);
  return j;
}

std::string to_text(const SearchCell& c) {
  std::ostringstream os;
  os << c.question << ' ' << c.cell << ": " << to_string(c.verdict) << "  H(X) >= " << to_string(c.base.lower)
     << (c.base.complete ? " (exact)" : "") << ", H(pX) >= " << to_string(c.with_p.lower);
  if (!c.notes.empty()) os << "  [" << join(c.notes, "; ") << "]";
  return os.str();
}

Json to_json(const SearchSummary& s) {
  Json j;
  j["question"] = s.question;
  j["summary"] = true;
  j["cells"] = s.cells;
  j["witnesses"] = s.witnesses;
  j["non_witnesses"] = s.non_witnesses;
  j["inconclusive"] = s.inconclusive;
  Json w = Json::array(), inc = Json::array();
  for (const auto& c : s.witness_cells) w.push_back(c.cell);
  for (const auto& c : s.inconclusive_cells) inc.push_back(c.cell);
  j["witness_cells"] = w;
  j["inconclusive_cells"] = inc;
  return j;
}

std::string to_text(const SearchSummary& s) {
  std::ostringstream os;
  os << s.question << ": " << s.cells << " cells, " << s.witnesses << " witnesses, " << s.non_witnesses
     << " non-witnesses, " << s.inconclusive << " inconclusive";
  for (const auto& c : s.witness_cells) os << "\n  witness " << c.cell;
  for (const auto& c : s.inconclusive_cells) os << "\n  inconclusive " << c.cell;
  return os.str();
}

Json to_json(const Prop3Report& r) {
  Json j;
  j["question"] = "prop3-witness";
  j["prime_floor"] = r.prime_floor;
  j["attempts"] = r.attempts;
  Json w = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    Json x;
    x["factorization"] = r.witnesses[i].to_string();
    x["n"] = integer_json(r.witnesses[i].value());
    x["check"] = to_json(r.witness_checks[i]);
    w.push_back(x);
  }
  j["witnesses"] = w;
  j["example"] = r.example.to_string();
  j["example_primitive_nondeficient"] = r.example_primitive_nondeficient;
  j["example_hypothesis_failures"] = strings(r.example_failures);
  j["progress"] = r.progress;
  return j;
}

std::string to_text(const Prop3Report& r) {
  std::ostringstream os;
  os << "prop3 witness search from " << r.prime_floor << ": " << r.progress << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    os << "  witness " << r.witnesses[i].to_string() << "  T upper bound: " << to_string(r.witness_checks[i].status)
       << '\n';
  }
  os << "  printed example " << r.example.to_string() << " misses: " << join(r.example_failures, ", ");
  return os.str();
}

Json to_json(const CandidateReport& r) {
  Json j;
  j["input"] = r.input.to_string();
  j["value"] = integer_json(r.value);
  j["special"] = r.special ? Json(r.input.terms()[*r.special].base.get_str() + "^" +
                                  std::to_string(r.input.terms()[*r.special].exponent))
                           : Json(nullptr);
  j["verdict"] = std::string(to_string(r.verdict));
  j["refuted_by"] = strings(r.refuted_by);
  Json cs = Json::array();
  for (const auto& o : r.outcomes) {
    Json c;
    c["constraint"] = o.constraint_id;
    c["status"] = std::string(to_string(o.status));
    if (o.result) {
      c["lhs_lo"] = lo_text(*o.result, true);
      c["lhs_hi"] = hi_text(*o.result, true);
      c["rhs_lo"] = lo_text(*o.result, false);
      c["rhs_hi"] = hi_text(*o.result, false);
      c["precision_bits"] = o.result->precision_bits;
    }
    c["note"] = o.note;
    cs.push_back(c);
  }
  j["constraints"] = cs;
  j["warnings"] = strings(r.warnings);
  return j;
}

std::string to_text(const CandidateReport& r) {
  std::ostringstream os;
  os << "candidate " << r.input.to_string() << " = " << r.value.get_str() << '\n';
  for (const auto& o : r.outcomes) {
    os << "  " << o.constraint_id << ": " << to_string(o.status);
    if (!o.note.empty()) os << "  (" << o.note << ")";
    os << '\n';
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
  os << "verdict: " << to_string(r.verdict);
  if (!r.refuted_by.empty()) os << " by " << join(r.refuted_by, ", ");
  return os.str();
}

}  // namespace abundancy
