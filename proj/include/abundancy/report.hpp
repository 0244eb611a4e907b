#pragma once

// JSON and text renderings of every report type. JSON keys keep schema
// order; integers that fit in 64 bits are numbers, larger ones and all
// rationals are strings.

#include <json.hpp>
#include <string>
#include <string_view>

#include "abundancy/bounds.hpp"
#include "abundancy/candidate.hpp"
#include "abundancy/lemmas.hpp"
#include "abundancy/search.hpp"
#include "abundancy/specials.hpp"

namespace abundancy {

using Json = nlohmann::ordered_json;

enum class Format { Text, Jsonl, Json };
/// "text", "jsonl" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

Json integer_json(const Integer& n);

/// Every arithmetic quantity of n: sigma, h, H, T, S, D, classification and
/// primitivity.
Json compute_json(const Factorization& f);
std::string compute_text(const Factorization& f);

/// {bound_id, n, param, verdict, lhs_lo, lhs_hi, rhs_lo, rhs_hi,
///  precision_bits, hypothesis_failures, flags, empirical, witness}.
/// Exact sides print as rationals, interval sides as 20-digit decimals.
Json to_json(const BoundCheckRecord& r);
std::string to_text(const BoundCheckRecord& r);

Json to_json(const SweepSummary& s);
std::string to_text(const SweepSummary& s);

Json to_json(const LemmaReport& r);
std::string to_text(const LemmaReport& r);

Json to_json(const SpecialsReport& r);
std::string to_text(const SpecialsReport& r);

Json to_json(const CEstimate& c);

/// {question, cell, verdict, h_lower_num, h_lower_den, complete, notes}
/// plus the H(pX) bounds.
Json to_json(const SearchCell& c);
std::string to_text(const SearchCell& c);
Json to_json(const SearchSummary& s);
std::string to_text(const SearchSummary& s);

Json to_json(const Prop3Report& r);
std::string to_text(const Prop3Report& r);

Json to_json(const CandidateReport& r);
std::string to_text(const CandidateReport& r);

}  // namespace abundancy
