#include "symbool/report.hpp"

#include <ostream>

namespace symbool {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json sanfv_list(const std::vector<Sanfv>& fs)
{
    json a = json::array();
    for (const auto& f : fs) a.push_back(f.to_string());
    return a;
}

}  // namespace

json degree_json(const Degree& d) { return d.is_zero_function() ? json(nullptr) : json(d.value()); }

json profile_json(const ImmunityProfile& p, const BoundReport* bounds)
{
    json j;
    j["n"] = p.f.n();
    j["f"] = p.f.to_string();
    j["deg"] = degree_json(p.deg);
    j["ai"] = p.ai;
    j["ai_witness"] = monomial_list(p.ai_witness);
    j["ai_witness_annihilates"] = p.ai_witness_of_complement ? "f+1" : "f";
    j["fai"] = p.fai;
    j["fai_witness"] = {{"g", monomial_list(p.fai_g)}, {"h", monomial_list(p.fai_h)}};
    j["capped"] = p.capped;
    if (bounds) j["bounds"] = bounds_json(*bounds);
    return j;
}

json bounds_json(const BoundReport& r)
{
    json a = json::array();
    for (const auto& c : r.checks)
        a.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
    return a;
}

json certificate_json(const AttackCertificate& c)
{
    json j;
    j["source"] = to_string(c.source);
    j["n"] = c.g.n();
    j["g"] = c.g.to_string();
    j["h"] = c.h.to_string();
    j["deg_g"] = degree_json(c.deg_g);
    j["deg_h"] = degree_json(c.deg_h);
    j["params"] = {{"e", optional_int(c.e)}, {"t", optional_int(c.t)}, {"k", optional_int(c.k)}, {"m", optional_int(c.m)}};
    j["vanishing"] = c.vanishing;
    return j;
}

json violation_json(const Violation& v) { return {{"f", v.f}, {"check", v.check}, {"detail", v.detail}}; }

json search_report_json(const SearchReport& r, bool include_wall_time)
{
    json j;
    j["n"] = r.n;
    j["count"] = r.count;
    j["max_fai"] = r.max_fai;
    j["max_fai_witnesses"] = sanfv_list(r.max_fai_witnesses);
    j["mai_list"] = sanfv_list(r.mai_list);
    json v = json::array();
    for (const auto& x : r.violations) v.push_back(violation_json(x));
    j["violations"] = v;
    if (include_wall_time) j["wall_time"] = r.wall_time;
    return j;
}

json statistic_json(const GapStatistic& s)
{
    return {{"n", s.n}, {"samples", s.samples}, {"seed", s.seed}, {"gap_sum", s.gap_sum}, {"mean_gap", s.mean()}};
}

void write_profiles_jsonl(const SearchReport& r, std::ostream& out)
{
    for (const auto& rec : r.records) out << profile_json(rec.profile).dump() << '\n';
}

}  // namespace symbool
