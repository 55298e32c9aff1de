#pragma once

// Explicit fast-algebraic-attack multipliers read off the SANFV, and the
// degree / immunity inequalities that hold for every symmetric function.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symbool/immunity.hpp"
#include "symbool/sanfv.hpp"

namespace symbool {

enum class CertificateSource { Thm3, Thm4, Thm5Annihilator, Thm5Multiplier };

std::string to_string(CertificateSource s);

// A pair (g, h) with h = g f.
struct AttackCertificate {
    CertificateSource source = CertificateSource::Thm3;
    Sanfv g{1};
    Sanfv h{1};
    Degree deg_g;
    Degree deg_h;
    // Degree bound on h promised by the construction.
    int bound_h = 0;
    std::optional<int> e, t, k, m;
    bool vanishing = false;  // h = 0
};

// Re-checks h = g f and the promised degree bound; throws InvariantViolation.
void verify(const AttackCertificate& c, const Sanfv& f);

// deg(f) = 2t+1: g = sigma_1 + lambda(2t) + 1 gives deg(g f) <= 2t - 1.
AttackCertificate thm3_multiplier(const Sanfv& f);

// Degree of h predicted from the SANFV alone: 2s+1 with s the largest index
// such that lambda(2s) = 1 (when lambda(2t) = 0) or lambda(2s) != lambda(2s+1)
// (when lambda(2t) = 1), or the zero marker when no such s exists.
Degree thm3_predicted_degree(const Sanfv& f);

// One certificate per distinct e = deg(f) mod 2^k over the admissible k,
// sorted by e ascending. Empty when deg(f) <= 1 or is a power of 2.
std::vector<AttackCertificate> thm4_multipliers(const Sanfv& f);

// True when 2^m <= n < 2^m + 2^(m-1) - 1, m = floor(log2 n).
bool thm5_applies(int n);

// Split f at level m-1 and form g = sigma_e (f_{m-1} + 1). A nonzero g yields
// an annihilator-type pair of degrees <= 2^(m-1) - 1; otherwise sigma_e f has
// degree exactly 2^(m-1) + e. By default e = n - 2^m + 1; any e with
// n - 2^m < e < 2^(m-1) is accepted.
AttackCertificate thm5_certificate(const Sanfv& f, std::optional<int> e = std::nullopt);

// For h = g f: h annihilates f+1 when h != 0, otherwise g annihilates f.
struct DerivedAnnihilator {
    Sanfv g{1};
    bool of_complement = false;
};
DerivedAnnihilator annihilator_from(const AttackCertificate& c);

// Every certificate the constructions above offer for f.
std::vector<AttackCertificate> all_certificates(const Sanfv& f);

struct BoundCheck {
    std::string name;
    bool applicable = false;
    bool holds = true;
    std::string detail;
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_hold() const;
};

BoundReport bound_suite(const ImmunityProfile& p);

struct GapStatistic {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t gap_sum = 0;  // mean = gap_sum / samples
    double mean() const { return samples ? static_cast<double>(gap_sum) / static_cast<double>(samples) : 0.0; }
};

// Mean of deg(f) - deg(g f) over random f with lambda(n) = 1 and uniform
// lower coefficients, g from thm3_multiplier. A vanishing product counts as
// a gap of n. Deterministic in (n, samples, seed).
GapStatistic expectation_statistic(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace symbool
