#pragma once

// JSON encodings of profiles, certificates and search reports. Degrees of
// the zero function encode as null. Witnesses are monomial lists in graded
// order ("1", "x1", "x1*x3", ...).

#include <iosfwd>

#include <json.hpp>

#include "symbool/attacks.hpp"
#include "symbool/immunity.hpp"
#include "symbool/search.hpp"

namespace symbool {

nlohmann::json degree_json(const Degree& d);

nlohmann::json profile_json(const ImmunityProfile& p, const BoundReport* bounds = nullptr);
nlohmann::json bounds_json(const BoundReport& r);
nlohmann::json certificate_json(const AttackCertificate& c);
nlohmann::json violation_json(const Violation& v);
// wall_time is left out unless asked for, so reruns produce identical bytes.
nlohmann::json search_report_json(const SearchReport& r, bool include_wall_time = false);
nlohmann::json statistic_json(const GapStatistic& s);

// One profile per line, in enumeration order.
void write_profiles_jsonl(const SearchReport& r, std::ostream& out);

}  // namespace symbool
