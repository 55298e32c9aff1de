#include "symbool/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symbool/attacks.hpp"
#include "symbool/errors.hpp"
#include "symbool/immunity.hpp"
#include "symbool/report.hpp"
#include "symbool/search.hpp"

namespace symbool {

namespace {

struct Request {
    std::string command;
    std::optional<int> n;
    std::string f;
    std::optional<int> e;
    std::optional<int> k;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;
    double budget_seconds = 0.0;
    std::string format;  // empty: command default
    std::string out_path;
    std::string profiles_path;
    bool serial = false;
};

int parse_int(std::string_view text, const char* what)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

int require_n(const Request& r)
{
    if (!r.n) throw ParseError(r.command + " needs --n");
    return *r.n;
}

Sanfv require_function(const Request& r)
{
    if (r.f.empty()) throw ParseError(r.command + " needs --f");
    return parse_function_spec(r.f, r.n);
}

std::string format_or(const Request& r, const std::string& fallback) { return r.format.empty() ? fallback : r.format; }

std::string pretty_profile(const ImmunityProfile& p, const BoundReport& b)
{
    std::ostringstream os;
    os << "f        " << p.f.to_string() << "  (n=" << p.f.n() << ")\n";
    os << "values   " << to_values(p.f).to_string() << '\n';
    os << "deg      " << p.deg.to_string() << '\n';
    os << "AI       " << p.ai << "  annihilator of " << (p.ai_witness_of_complement ? "f+1" : "f") << '\n';
    os << "FAI      " << p.fai << (p.capped ? "  (= 2 AI)" : "") << '\n';
    os << "bounds   " << (b.all_hold() ? "all hold" : "VIOLATED") << '\n';
    for (const auto& c : b.checks)
        if (c.applicable) os << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << "  " << c.detail << '\n';
    return os.str();
}

std::string pretty_certificate(const AttackCertificate& c)
{
    std::ostringstream os;
    os << to_string(c.source) << ": g=" << c.g.to_string() << " (deg " << c.deg_g.to_string() << "), h=" << c.h.to_string()
       << " (deg " << c.deg_h.to_string() << ")" << (c.vanishing ? " vanishing" : "") << '\n';
    return os.str();
}

int cmd_analyze(const Request& r, std::ostream& out, std::ostream& err)
{
    const Sanfv f = require_function(r);
    const ImmunityProfile p = profile(f);
    const BoundReport b = bound_suite(p);
    const std::string fmt = format_or(r, "json");
    if (fmt == "pretty") {
        out << pretty_profile(p, b);
        if (r.e) out << "min d for e=" << *r.e << "  " << min_d_for_e(f, *r.e) << '\n';
    } else if (fmt == "json") {
        auto j = profile_json(p, &b);
        if (r.e) j["min_d_for_e"] = {{"e", *r.e}, {"d", min_d_for_e(f, *r.e)}};
        out << j.dump(2) << '\n';
    } else {
        throw ParseError("analyze supports --format json or pretty");
    }
    if (!b.all_hold()) {
        for (const auto& c : b.checks)
            if (c.applicable && !c.holds) err << "violation: " << f.to_string() << ' ' << c.name << ' ' << c.detail << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_attack(const Request& r, std::ostream& out)
{
    const Sanfv f = require_function(r);
    std::vector<AttackCertificate> certs;
    const Degree d = f.degree();
    if (!d.is_zero_function() && d.value() % 2 == 1) certs.push_back(thm3_multiplier(f));
    for (auto& c : thm4_multipliers(f))
        if (!r.k || c.k == *r.k) certs.push_back(std::move(c));
    if (thm5_applies(f.n())) certs.push_back(thm5_certificate(f, r.e));

    const std::string fmt = format_or(r, "json");
    if (fmt == "pretty") {
        if (certs.empty()) out << "no certificates apply\n";
        for (const auto& c : certs) out << pretty_certificate(c);
    } else if (fmt == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : certs) a.push_back(certificate_json(c));
        out << a.dump(2) << '\n';
    } else {
        throw ParseError("attack supports --format json or pretty");
    }
    return kExitOk;
}

int cmd_search(const Request& r, std::ostream& out, std::ostream& err)
{
    const int n = require_n(r);
    SearchOptions opts;
    opts.budget_seconds = r.budget_seconds;
    const SearchReport rep = r.serial ? profile_all_serial(n, opts) : profile_all(n, opts);

    if (!r.profiles_path.empty()) {
        std::ofstream dump(r.profiles_path);
        if (!dump) throw ParseError("cannot open " + r.profiles_path);
        write_profiles_jsonl(rep, dump);
    }

    const std::string fmt = format_or(r, "json");
    if (fmt == "pretty") {
        out << "n=" << rep.n << " profiled " << rep.count << " functions in " << rep.wall_time << " s\n";
        out << "max FAI " << rep.max_fai << " attained by " << rep.max_fai_witnesses.size() << " functions\n";
        out << "MAI functions " << rep.mai_list.size() << '\n';
        for (const auto& f : rep.mai_list) out << "  " << f.to_string() << "  deg " << f.degree().to_string() << '\n';
        out << "violations " << rep.violations.size() << '\n';
    } else if (fmt == "json") {
        out << search_report_json(rep).dump(2) << '\n';
    } else {
        throw ParseError("search supports --format json or pretty");
    }

    if (!rep.violations.empty()) {
        for (const auto& v : rep.violations) err << "violation: " << v.f << ' ' << v.check << ' ' << v.detail << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_convert(const Request& r, std::ostream& out)
{
    if (r.f.empty()) throw ParseError("convert needs --f");
    const bool from_values = r.f.starts_with("v:");
    const Sanfv f = parse_function_spec(r.f, r.n);
    const std::string fmt = format_or(r, "text");
    if (fmt == "json") {
        out << nlohmann::json{{"n", f.n()}, {"sanfv", f.to_string()}, {"values", to_values(f).to_string()}}.dump(2) << '\n';
    } else if (fmt == "text" || fmt == "pretty") {
        out << (from_values ? f.to_string() : to_values(f).to_string()) << '\n';
    } else {
        throw ParseError("convert supports --format text, json or pretty");
    }
    return kExitOk;
}

int cmd_tables(const Request& r, std::ostream& out)
{
    const DegreeImmunityTables t = emit_tables();
    const std::string fmt = format_or(r, "csv");
    if (fmt == "csv") {
        out << tables_csv(t);
    } else if (fmt == "json" || fmt == "pretty") {
        nlohmann::json j;
        for (const auto& row : t.upper_ai_by_degree) j["upper_ai_by_degree"].push_back({{"range", row.range}, {"bound", row.bound}});
        for (const auto& row : t.lower_degree_by_ai) j["lower_degree_by_ai"].push_back({{"range", row.range}, {"bound", row.bound}});
        out << j.dump(2) << '\n';
    } else {
        throw ParseError("tables supports --format csv or json");
    }
    return kExitOk;
}

int cmd_stat(const Request& r, std::ostream& out)
{
    const int n = require_n(r);
    const GapStatistic s = expectation_statistic(n, r.samples, r.seed);
    const std::string fmt = format_or(r, "json");
    if (fmt == "pretty") {
        out << "n=" << s.n << " samples=" << s.samples << " seed=" << s.seed << " mean gap " << s.gap_sum << '/'
            << s.samples << " = " << s.mean() << '\n';
    } else if (fmt == "json") {
        out << statistic_json(s).dump(2) << '\n';
    } else {
        throw ParseError("stat supports --format json or pretty");
    }
    return kExitOk;
}

int dispatch(const Request& r, std::ostream& out, std::ostream& err)
{
    if (r.command == "analyze") return cmd_analyze(r, out, err);
    if (r.command == "attack") return cmd_attack(r, out);
    if (r.command == "search") return cmd_search(r, out, err);
    if (r.command == "convert") return cmd_convert(r, out);
    if (r.command == "tables") return cmd_tables(r, out);
    if (r.command == "stat") return cmd_stat(r, out);
    throw ParseError("unknown command '" + r.command + "'");
}

}  // namespace

Sanfv parse_function_spec(std::string_view spec, std::optional<int> n)
{
    auto need_n = [&]() {
        if (!n) throw ParseError("'" + std::string(spec) + "' needs --n");
        return *n;
    };
    Sanfv f(1);
    if (spec.starts_with("sigma:")) {
        f = sigma(need_n(), parse_int(spec.substr(6), "sigma index"));
    } else if (spec == "majority") {
        f = majority(need_n());
    } else if (spec.starts_with("threshold:")) {
        f = threshold(need_n(), parse_int(spec.substr(10), "threshold"));
    } else if (spec.starts_with("v:")) {
        f = to_sanfv(WeightValueVector::from_string(spec));
    } else {
        f = Sanfv::from_string(spec);
    }
    if (n && f.n() != *n)
        throw ParseError("function spec has " + std::to_string(f.n() + 1) + " entries, --n " + std::to_string(*n) +
                         " needs " + std::to_string(*n + 1));
    return f;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact algebraic and fast algebraic immunity of symmetric Boolean functions"};
    app.require_subcommand(1);

    Request req;
    std::optional<int> n, e, k;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "number of variables");
        sub->add_option("--format", req.format, "json, csv, pretty (text for convert)");
        sub->add_option("--out", req.out_path, "write the report to PATH");
    };
    auto add_function = [&](CLI::App* sub) {
        sub->add_option("--f", req.f, "SANFV bits, v:<values>, sigma:i, majority, threshold:k");
    };

    auto* analyze = app.add_subcommand("analyze", "degree, AI, FAI with witnesses and the bound suite");
    add_common(analyze);
    add_function(analyze);
    analyze->add_option("--e", e, "also report the least deg(g f) over nonconstant g with deg(g) <= e");

    auto* attack = app.add_subcommand("attack", "explicit low-degree multipliers");
    add_common(attack);
    add_function(attack);
    attack->add_option("--e", e, "override the sigma_e index of the thm5 construction");
    attack->add_option("--k", k, "only the thm4 certificate built at split level k");

    auto* search = app.add_subcommand("search", "profile every symmetric function on n variables");
    add_common(search);
    search->add_option("--budget-seconds", req.budget_seconds, "abort when the run exceeds this many seconds");
    search->add_option("--profiles", req.profiles_path, "write one JSON profile per line to PATH");
    search->add_flag("--serial", req.serial, "use the single-threaded reference enumeration");

    auto* convert = app.add_subcommand("convert", "SANFV <-> value vector");
    add_common(convert);
    add_function(convert);

    auto* tables = app.add_subcommand("tables", "degree / AI tables");
    add_common(tables);

    auto* stat = app.add_subcommand("stat", "mean degree drop of the affine multiplier on random odd-degree f");
    add_common(stat);
    stat->add_option("--samples", req.samples, "number of random functions");
    stat->add_option("--seed", req.seed, "RNG seed");

    std::vector<std::string> owned{"symbool"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    for (auto* sub : app.get_subcommands()) req.command = sub->get_name();
    req.n = n;
    req.e = e;
    req.k = k;

    try {
        if (req.out_path.empty()) return dispatch(req, out, err);
        std::ostringstream buffer;
        const int code = dispatch(req, buffer, err);
        std::ofstream file(req.out_path);
        if (!file) throw ParseError("cannot open " + req.out_path);
        file << buffer.str();
        return code;
    } catch (const CapabilityError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitCapability;
    } catch (const InvariantViolation& ex) {
        err << "invariant violation: " << ex.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& ex) {  // ParseError, DimensionError, PreconditionError
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace symbool
