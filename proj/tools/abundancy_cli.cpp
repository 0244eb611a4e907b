// Command-line front end: compute, enumerate, verify, spoof, check-candidate,
// search and fixtures. Exit codes: 0 success, 1 certified Fails (or a false
// spoof test), 2 usage or input error, 3 Undecided results remain.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "abundancy/bounds.hpp"
#include "abundancy/candidate.hpp"
#include "abundancy/divisor_functions.hpp"
#include "abundancy/enumerate.hpp"
#include "abundancy/fixture.hpp"
#include "abundancy/lemmas.hpp"
#include "abundancy/report.hpp"
#include "abundancy/search.hpp"
#include "abundancy/specials.hpp"
#include "abundancy/spoof.hpp"

using namespace abundancy;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kUndecided = 3 };

// Streams records as text lines, JSON lines, or one JSON array at the end.
class Output {
 public:
  explicit Output(Format f) : format_(f) {}
  ~Output() { finish(); }

  template <typename T>
  void emit(const T& item) {
    switch (format_) {
      case Format::Text: std::cout << to_text(item) << '\n'; break;
      case Format::Jsonl: std::cout << to_json(item).dump() << '\n'; break;
      case Format::Json: array_.push_back(to_json(item)); break;
    }
  }
  void emit_json(const Json& j, const std::string& text) {
    switch (format_) {
      case Format::Text: std::cout << text << '\n'; break;
      case Format::Jsonl: std::cout << j.dump() << '\n'; break;
      case Format::Json: array_.push_back(j); break;
    }
  }
  void finish() {
    if (format_ == Format::Json && !finished_) {
      std::cout << (array_.size() == 1 ? array_[0] : array_).dump(2) << '\n';
    }
    finished_ = true;
  }

 private:
  Format format_;
  Json array_ = Json::array();
  bool finished_ = false;
};

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
  long precision_cap = kDefaultPrecisionCap;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "jsonl", "json"}));
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app->add_option("--precision-cap", c.precision_cap, "Largest interval precision in bits")->check(CLI::Range(8L, 1L << 24));
}

int worst(int a, int b) {
  // Fails outranks Undecided outranks success.
  auto rank = [](int e) { return e == kFails ? 2 : e == kUndecided ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int status_exit(const SweepSummary& s) {
  if (s.violations > 0) return kFails;
  if (s.undecided > 0) return kUndecided;
  return kOk;
}

int verdict_exit(Verdict v) { return v == Verdict::Fails ? kFails : v == Verdict::Undecided ? kUndecided : kOk; }

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  std::uint64_t limit = 100'000;
  bool odd_only = false;
  std::uint64_t cutoff = 100'000'000;
};

int run_lemmas(const VerifyArgs& a, Output& out, SweepSummary& summary) {
  LemmaOptions lo{a.common.precision_cap, a.common.jobs};
  const std::uint64_t q_limit = std::max<std::uint64_t>(3, std::min<std::uint64_t>(a.limit, 10'000));
  const std::uint64_t cutoff = std::max(a.cutoff, q_limit);
  int code = kOk;
  for (const LemmaReport& r :
       {verify_lemma_taylor(TaylorMode::Certify, lo), verify_pi_lower(a.limit, lo), verify_nth_prime_lower(a.limit, lo),
        verify_log_bound(std::max<std::uint64_t>(a.limit, 2), lo), verify_prime_square_tail(q_limit, cutoff, lo),
        verify_prime_square_product(q_limit, cutoff, lo)}) {
    out.emit(r);
    summary.add(to_record(r));
    code = worst(code, verdict_exit(r.verdict));
  }
  const CEstimate c = estimate_C(a.limit, a.odd_only, a.common.jobs);
  out.emit_json(to_json(c), "estimate.C over n <= " + std::to_string(a.limit) + ": " + to_string(c.value) +
                                " at n = " + std::to_string(c.attained_at));
  return code;
}

int run_verify(const VerifyArgs& a) {
  Output out(parse_format(a.common.format));
  const Suite suite = parse_suite(a.suite);
  SweepOptions so;
  so.limit = a.limit;
  so.odd_only = a.odd_only;
  so.jobs = a.common.jobs;
  so.precision_cap = a.common.precision_cap;
  SweepSummary summary;
  int code = kOk;

  auto sweep = [&](Suite s) {
    const SweepSummary part = sweep_bounds(s, so, [&](const BoundCheckRecord& r) { out.emit(r); });
    summary.merge(part);
    code = worst(code, status_exit(part));
  };
  auto specials = [&] {
    const SpecialsReport r = no_tricky_specials_scan(a.limit, false, a.common.jobs);
    out.emit(r);
    BoundCheckRecord rec;
    rec.bound_id = "prop.no-tricky-specials";
    rec.input = "q<=" + std::to_string(a.limit);
    rec.status = r.ok() ? Status::Holds : Status::Fails;
    summary.add(rec);
    if (!r.ok()) code = worst(code, kFails);
  };

  switch (suite) {
    case Suite::PrimitiveNondeficient:
    case Suite::Shape:
    case Suite::LargestPrime: sweep(suite); break;
    case Suite::Lemmas: code = worst(code, run_lemmas(a, out, summary)); break;
    case Suite::Specials: specials(); break;
    case Suite::All:
      sweep(Suite::PrimitiveNondeficient);
      sweep(Suite::Shape);
      sweep(Suite::LargestPrime);
      code = worst(code, run_lemmas(a, out, summary));
      specials();
      break;
  }
  out.finish();
  std::cerr << "verify " << a.suite << ": " << to_text(summary) << '\n';
  return code;
}

// --- the other subcommands ---------------------------------------------------

int run_compute(const std::string& input, const Common& c, std::uint64_t budget) {
  FactorOptions fo;
  fo.rho_budget = budget;
  const Factorization f = parse_factorization(input, fo);
  const Format format = parse_format(c.format);
  if (format == Format::Text) {
    std::cout << compute_text(f);
  } else {
    std::cout << compute_json(f).dump(format == Format::Json ? 2 : -1) << '\n';
  }
  return kOk;
}

int run_enumerate(std::uint64_t limit, bool odd_only, const Common& c, const std::string& fixture) {
  EnumerateOptions eo;
  eo.odd_only = odd_only;
  eo.jobs = c.jobs;
  const Format format = parse_format(c.format);
  std::vector<Integer> stream;
  Json array = Json::array();
  for_each_primitive_nondeficient(limit, eo, [&](const Factorization& f) {
    const Integer n = f.value();
    if (!fixture.empty()) stream.push_back(n);
    Json j;
    j["n"] = integer_json(n);
    j["factorization"] = f.to_string();
    switch (format) {
      case Format::Text: std::cout << n.get_str() << ' ' << f.to_string() << '\n'; break;
      case Format::Jsonl: std::cout << j.dump() << '\n'; break;
      case Format::Json: array.push_back(j); break;
    }
  });
  if (format == Format::Json) std::cout << array.dump(2) << '\n';
  if (fixture.empty()) return kOk;
  const FixtureReport r = crosscheck_fixture(stream, std::filesystem::path(fixture));
  std::cerr << "fixture " << fixture << ": " << r.matched << " of " << r.compared << " matched";
  if (r.first_mismatch) {
    std::cerr << "; first mismatch at index " << r.first_mismatch->index << ": expected "
              << r.first_mismatch->expected.get_str() << ", got " << r.first_mismatch->actual.get_str();
  }
  std::cerr << '\n';
  return r.ok() ? kOk : kFails;
}

int run_spoof(const std::string& input, const Common& c) {
  const SpoofFactorization sf = parse_spoof(input);
  const bool perfect = is_spoof_perfect(sf);
  Json j;
  j["input"] = sf.to_string();
  j["pairs"] = Json::parse(sf.to_json());
  j["value"] = integer_json(sf.value());
  j["sigma_tilde"] = integer_json(sigma_tilde(sf));
  j["spoof_perfect"] = perfect;
  j["warnings"] = sf.warnings();
  const Format format = parse_format(c.format);
  if (format == Format::Text) {
    std::cout << "value: " << sf.value().get_str() << '\n'
              << "sigma~: " << sigma_tilde(sf).get_str() << '\n'
              << "spoof perfect: " << (perfect ? "true" : "false") << '\n';
    for (const auto& w : sf.warnings()) std::cout << "warning: " << w << '\n';
  } else {
    std::cout << j.dump(format == Format::Json ? 2 : -1) << '\n';
  }
  return perfect ? kOk : kFails;
}

int run_candidate(const std::string& input, const Common& c, bool primality, const std::string& special) {
  CandidateOptions o;
  o.verify_primality = primality;
  o.precision_cap = c.precision_cap;
  if (!special.empty()) {
    const SpoofFactorization s = parse_spoof(special);
    if (s.size() != 1) throw std::invalid_argument("--special takes one pair such as 22021^1");
    o.special = s.terms()[0];
  }
  const CandidateReport r = opn_candidate_report(parse_spoof(input), o);
  Output out(parse_format(c.format));
  out.emit(r);
  out.finish();
  for (const auto& oc : r.outcomes) {
    if (oc.status == Status::Undecided && r.verdict == CandidateVerdict::Consistent) return kUndecided;
  }
  return r.verdict == CandidateVerdict::Refuted ? kFails : kOk;
}

struct SearchArgs {
  Common common;
  std::string question = "1";
  std::uint64_t p_limit = 1000;
  std::uint64_t m_limit = 50;
  std::uint64_t a_limit = 20;
  std::uint64_t budget = 200'000;
  std::uint64_t seed = 0x5eed;
  std::uint64_t prime_floor = 11;
  std::uint64_t attempts = 5000;
};

int run_search(const SearchArgs& a) {
  SearchOptions o;
  o.factor_budget = a.budget;
  o.seed = a.seed;
  o.jobs = a.common.jobs;
  Output out(parse_format(a.common.format));
  auto sink = [&](const SearchCell& c) { out.emit(c); };
  auto finish = [&](const SearchSummary& s) {
    out.emit(s);
    out.finish();
    return s.inconclusive > 0 ? kUndecided : kOk;
  };
  if (a.question == "1") return finish(search_question1(a.p_limit, o, sink));
  if (a.question == "2") return finish(search_question2(a.m_limit, a.p_limit, o, sink));
  if (a.question == "3") return finish(search_question3(a.p_limit, a.a_limit, o, sink));
  if (a.question == "anchors") {
    int code = kOk;
    for (const auto& c : question3_anchors(o)) {
      out.emit(c);
      if (c.verdict == CellVerdict::Inconclusive) code = kUndecided;
    }
    return code;
  }
  const Prop3Report r = search_prop3_witness(a.prime_floor, a.attempts);
  out.emit(r);
  return kOk;
}

int run_fixtures(const std::string& dir, std::uint64_t pnd_limit, std::uint64_t perfect_limit, std::uint64_t nt_count,
                 unsigned jobs) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string tail = " --pnd-limit " + std::to_string(pnd_limit) + " --perfect-limit " +
                           std::to_string(perfect_limit) + " --nt-count " + std::to_string(nt_count);
  const std::string command = "generated by: abundancy fixtures --out <dir>" + tail;

  std::vector<Integer> pnd;
  for (const auto& f : enumerate_primitive_nondeficient(pnd_limit, {.jobs = jobs})) pnd.push_back(f.value());
  write_fixture(fs::path(dir) / "A006039.txt", pnd,
                {"A006039: primitive non-deficient numbers <= " + std::to_string(pnd_limit), command});

  std::vector<Integer> perfect;
  for (auto n : perfect_numbers_upto(perfect_limit, jobs)) perfect.push_back(from_u64(n));
  write_fixture(fs::path(dir) / "A000396.txt", perfect,
                {"A000396: perfect numbers <= " + std::to_string(perfect_limit) + " by sigma(n) = 2n scan", command});

  std::vector<Integer> nt;
  for (std::uint64_t n = 1; n <= nt_count; ++n) nt.push_back(sum_n_over_p(factorize(n)));
  write_fixture(fs::path(dir) / "A069359.txt", nt,
                {"A069359: n * sum of 1/p over primes p | n, for n = 1.." + std::to_string(nt_count), command});
  std::cerr << "wrote " << pnd.size() << " + " << perfect.size() << " + " << nt.size() << " values to " << dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abundancy toolkit: sigma, H, T and bounds for primitive non-deficient and odd perfect numbers"};
  app.require_subcommand(0, 1);
  bool gcd15 = false;
  app.add_flag("--gcd15-table", gcd15, "Print the gcd(15, n) bounds for odd perfect numbers, with citations");

  Common compute_c;
  std::string compute_input;
  std::uint64_t compute_budget = 200'000;
  auto* compute = app.add_subcommand("compute", "Arithmetic functions of one n");
  compute->add_option("n", compute_input, "Integer or factorization such as 3^3*5*7")->required();
  compute->add_option("--factor-budget", compute_budget, "Pollard-Brent iterations per composite");
  add_common(compute, compute_c);

  Common enum_c;
  std::uint64_t enum_limit = 10'000;
  bool enum_odd = false;
  std::string enum_fixture;
  auto* enumerate = app.add_subcommand("enumerate", "Stream primitive non-deficient numbers");
  enumerate->add_option("--limit", enum_limit, "Largest n")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  enumerate->add_flag("--odd-only", enum_odd, "Odd n only");
  enumerate->add_option("--fixture", enum_fixture, "Cross-check the stream against a fixture file");
  add_common(enumerate, enum_c);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Certified bound sweeps and lemma checks");
  verify->add_option("--suite", va.suite, "pnd, shape, largest-prime, lemmas, specials or all")
      ->check(CLI::IsMember({"pnd", "shape", "largest-prime", "lemmas", "specials", "all"}));
  verify->add_option("--limit", va.limit, "Sweep limit")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{0xfffffffe}));
  verify->add_flag("--odd-only", va.odd_only, "Restrict number sweeps to odd n");
  verify->add_option("--cutoff", va.cutoff, "Prime-sum cutoff L for the prime-square lemmas");
  add_common(verify, va.common);

  Common spoof_c;
  std::string spoof_input;
  auto* spoof = app.add_subcommand("spoof", "Evaluate sigma~ and test spoof perfection");
  spoof->add_option("factorization", spoof_input, "e.g. 3^2*7^2*11^2*13^2*22021 or [[3,2],[7,2]]")->required();
  add_common(spoof, spoof_c);

  Common cand_c;
  std::string cand_input, cand_special;
  bool cand_primality = false;
  auto* candidate = app.add_subcommand("check-candidate", "Constraint report for a hypothetical odd perfect number");
  candidate->add_option("factorization", cand_input, "Spoof factorization")->required();
  candidate->add_option("--special", cand_special, "Designated special pair, e.g. 22021^1");
  candidate->add_flag("--verify-primality", cand_primality, "Require every base to be prime");
  add_common(candidate, cand_c);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Witness searches for the open questions");
  search->add_option("--question", sa.question, "1, 2, 3, anchors or prop3")
      ->check(CLI::IsMember({"1", "2", "3", "anchors", "prop3"}));
  search->add_option("--p-limit", sa.p_limit, "Largest prime p");
  search->add_option("--m-limit", sa.m_limit, "Largest cyclotomic index m");
  search->add_option("--a-limit", sa.a_limit, "Largest even exponent a");
  search->add_option("--factor-budget", sa.budget, "Pollard-Brent iterations per composite");
  search->add_option("--seed", sa.seed, "Pollard-Brent seed");
  search->add_option("--prime-floor", sa.prime_floor, "Smallest prime for prop3 witnesses");
  search->add_option("--budget", sa.attempts, "Candidates tried by the prop3 search");
  add_common(search, sa.common);

  std::string fx_dir = "fixtures";
  std::uint64_t fx_pnd = 10'000, fx_perfect = 40'000'000, fx_nt = 10'000;
  unsigned fx_jobs = 1;
  auto* fixtures = app.add_subcommand("fixtures", "Regenerate the sequence fixtures");
  fixtures->add_option("--out", fx_dir, "Output directory");
  fixtures->add_option("--pnd-limit", fx_pnd, "Limit for A006039");
  fixtures->add_option("--perfect-limit", fx_perfect, "Limit for A000396");
  fixtures->add_option("--nt-count", fx_nt, "Terms of A069359");
  fixtures->add_option("--jobs", fx_jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gcd15) {
      std::cout << gcd15_table_text();
      if (app.get_subcommands().empty()) return kOk;
    }
    if (*compute) return run_compute(compute_input, compute_c, compute_budget);
    if (*enumerate) return run_enumerate(enum_limit, enum_odd, enum_c, enum_fixture);
    if (*verify) return run_verify(va);
    if (*spoof) return run_spoof(spoof_input, spoof_c);
    if (*candidate) return run_candidate(cand_input, cand_c, cand_primality, cand_special);
    if (*search) return run_search(sa);
    if (*fixtures) return run_fixtures(fx_dir, fx_pnd, fx_perfect, fx_nt, fx_jobs);
    std::cerr << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
