#pragma once

// Exhaustive runs over all of SB_n and table emission.

#include <cstdint>
#include <string>
#include <vector>

#include "symbool/attacks.hpp"
#include "symbool/immunity.hpp"

namespace symbool {

inline constexpr int kMaxSearchVars = 10;

struct Violation {
    std::string f;  // SANFV string of the counterexample
    std::string check;
    std::string detail;
};

struct ProfileRecord {
    ImmunityProfile profile;
    BoundReport bounds;
    std::vector<Violation> violations;
};

struct SearchOptions {
    double budget_seconds = 0.0;  // <= 0: unlimited
};

struct SearchReport {
    int n = 0;
    std::uint64_t count = 0;
    int max_fai = 0;
    std::vector<Sanfv> max_fai_witnesses;
    std::vector<Sanfv> mai_list;
    std::vector<Violation> violations;
    double wall_time = 0.0;
    // Indexed by the SANFV's integer value (bit i = lambda(i)).
    std::vector<ProfileRecord> records;
};

// Profiles one function and runs every consistency check that applies to it:
// the bound suite, the certificate constructions, and the thm5 dichotomy.
ProfileRecord check_function(const Sanfv& f);

// OpenMP-parallel enumeration of SB_n in SANFV integer order.
SearchReport profile_all(int n, const SearchOptions& options = {});

// Single-threaded reference; produces the same report.
SearchReport profile_all_serial(int n, const SearchOptions& options = {});

// All f in SB_n with AI = ceil(n/2), in SANFV integer order.
std::vector<Sanfv> find_symmetric_mai(int n);

struct TableRow {
    std::string range;
    int bound = 0;
};

struct DegreeImmunityTables {
    std::vector<TableRow> upper_ai_by_degree;  // degree band [2^k, 2^(k+1)-1] -> 2^k
    std::vector<TableRow> lower_degree_by_ai;  // AI band (2^(k-1), 2^k] -> 2^k
};

DegreeImmunityTables emit_tables();

// table,range,bound rows for both tables.
std::string tables_csv(const DegreeImmunityTables& t);

}  // namespace symbool
