#include "symbool/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <sstream>

#include "symbool/errors.hpp"

namespace symbool {

namespace {

using Clock = std::chrono::steady_clock;

void check_search_n(int n)
{
    if (n < 1 || n > kMaxSearchVars)
        throw CapabilityError("exhaustive search supports 1 <= n <= " + std::to_string(kMaxSearchVars) + ", got " +
                              std::to_string(n));
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_certificates(const ImmunityProfile& p, ProfileRecord& rec)
{
    const Sanfv& f = p.f;
    const std::string name = f.to_string();
    auto fail = [&](const std::string& check, const std::string& detail) {
        rec.violations.push_back({name, check, detail});
    };

    const Degree d = f.degree();
    if (!d.is_zero_function() && d.value() % 2 == 1) {
        const AttackCertificate c = thm3_multiplier(f);
        if (c.deg_h != thm3_predicted_degree(f)) fail("thm3_degree_formula", "deg(h)=" + c.deg_h.to_string());
        if (d.value() >= 3 && !(c.deg_h <= d.value() - 2)) fail("thm3_gap", "deg(h)=" + c.deg_h.to_string());
    }

    const auto thm4 = thm4_multipliers(f);
    if (!d.is_zero_function() && d.value() >= 2) {
        const int expected = std::popcount(static_cast<unsigned>(d.value())) - 1;
        if (static_cast<int>(thm4.size()) != expected)
            fail("thm4_count", std::to_string(thm4.size()) + " certificates, expected " + std::to_string(expected));
    }

    if (thm5_applies(f.n())) {
        const AttackCertificate c = thm5_certificate(f);
        const int half = 1 << (*c.m - 1);
        if (c.source == CertificateSource::Thm5Annihilator) {
            if (p.ai > half - 1) fail("thm5_dichotomy", "annihilator case with ai=" + std::to_string(p.ai));
            const DerivedAnnihilator a = annihilator_from(c);
            const Sanfv target = a.of_complement ? complement(f) : f;
            if (!(a.g * target).is_zero() || a.g.is_zero()) fail("thm5_annihilator", "derived annihilator is invalid");
        } else if (!(c.deg_h == half + *c.e)) {
            fail("thm5_dichotomy", "multiplier case with deg(h)=" + c.deg_h.to_string());
        }
    }
}

ProfileRecord check_one(int n, std::uint64_t index)
{
    try {
        return check_function(Sanfv::from_mask(n, index));
    } catch (const std::exception& ex) {
        ProfileRecord rec;
        rec.profile.f = Sanfv::from_mask(n, index);
        rec.violations.push_back({rec.profile.f.to_string(), "exception", ex.what()});
        return rec;
    }
}

SearchReport reduce(int n, std::vector<ProfileRecord> records, double wall_time)
{
    SearchReport r;
    r.n = n;
    r.count = records.size();
    r.wall_time = wall_time;
    const int mai = (n + 1) / 2;
    for (const auto& rec : records) {
        const auto& p = rec.profile;
        if (p.fai > r.max_fai) {
            r.max_fai = p.fai;
            r.max_fai_witnesses.clear();
        }
        if (p.fai == r.max_fai) r.max_fai_witnesses.push_back(p.f);
        if (p.ai == mai) r.mai_list.push_back(p.f);
        for (const auto& v : rec.violations) r.violations.push_back(v);
    }
    r.records = std::move(records);
    return r;
}

void check_budget(const std::atomic<bool>& exceeded, double budget)
{
    if (exceeded.load())
        throw CapabilityError("search exceeded its budget of " + std::to_string(budget) + " seconds");
}

}  // namespace

ProfileRecord check_function(const Sanfv& f)
{
    ProfileRecord rec;
    rec.profile = profile(f);
    rec.bounds = bound_suite(rec.profile);
    for (const auto& c : rec.bounds.checks)
        if (c.applicable && !c.holds) rec.violations.push_back({f.to_string(), c.name, c.detail});
    check_certificates(rec.profile, rec);
    return rec;
}

SearchReport profile_all(int n, const SearchOptions& options)
{
    check_search_n(n);
    const auto start = Clock::now();
    const std::int64_t total = std::int64_t{1} << (n + 1);
    std::vector<ProfileRecord> records(static_cast<std::size_t>(total));
    std::atomic<bool> exceeded{false};

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < total; ++i) {
        if (exceeded.load(std::memory_order_relaxed)) continue;
        if (options.budget_seconds > 0 && seconds_since(start) > options.budget_seconds) {
            exceeded.store(true);
            continue;
        }
        records[static_cast<std::size_t>(i)] = check_one(n, static_cast<std::uint64_t>(i));
    }

    check_budget(exceeded, options.budget_seconds);
    return reduce(n, std::move(records), seconds_since(start));
}

SearchReport profile_all_serial(int n, const SearchOptions& options)
{
    check_search_n(n);
    const auto start = Clock::now();
    const std::uint64_t total = std::uint64_t{1} << (n + 1);
    std::vector<ProfileRecord> records;
    records.reserve(total);
    std::atomic<bool> exceeded{false};
    for (std::uint64_t i = 0; i < total; ++i) {
        if (options.budget_seconds > 0 && seconds_since(start) > options.budget_seconds) {
            exceeded.store(true);
            break;
        }
        records.push_back(check_one(n, i));
    }
    check_budget(exceeded, options.budget_seconds);
    return reduce(n, std::move(records), seconds_since(start));
}

std::vector<Sanfv> find_symmetric_mai(int n)
{
    check_search_n(n);
    const std::uint64_t total = std::uint64_t{1} << (n + 1);
    const int mai = (n + 1) / 2;
    std::vector<Sanfv> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        Sanfv f = Sanfv::from_mask(n, i);
        if (ai_symmetric(f).ai == mai) out.push_back(std::move(f));
    }
    return out;
}

DegreeImmunityTables emit_tables()
{
    DegreeImmunityTables t;
    for (int k = 0; k <= 7; ++k) {
        const int lo = 1 << k;
        const int hi = (1 << (k + 1)) - 1;
        const int bound = 1 << floor_log2(static_cast<std::uint64_t>(lo));
        if (bound != 1 << floor_log2(static_cast<std::uint64_t>(hi)))
            throw InvariantViolation("degree band does not share one upper AI");
        t.upper_ai_by_degree.push_back(
            {lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi), bound});
    }
    for (int k = 0; k <= 7; ++k) {
        const int hi = 1 << k;
        const int lo = k == 0 ? 1 : (1 << (k - 1)) + 1;
        const int bound = 1 << ceil_log2(static_cast<std::uint64_t>(hi));
        if (bound != 1 << ceil_log2(static_cast<std::uint64_t>(lo)))
            throw InvariantViolation("AI band does not share one lower degree");
        t.lower_degree_by_ai.push_back(
            {lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi), bound});
    }
    return t;
}

std::string tables_csv(const DegreeImmunityTables& t)
{
    std::ostringstream os;
    os << "table,range,bound\n";
    for (const auto& row : t.upper_ai_by_degree) os << "upper_ai_by_degree," << row.range << ',' << row.bound << '\n';
    for (const auto& row : t.lower_degree_by_ai) os << "lower_degree_by_ai," << row.range << ',' << row.bound << '\n';
    return os.str();
}

}  // namespace symbool
