#include "symbool/attacks.hpp"

#include <bit>
#include <random>

#include "symbool/errors.hpp"

namespace symbool {

namespace {

bool is_power_of_two(int x) { return x > 0 && std::has_single_bit(static_cast<unsigned>(x)); }

int pow2(int k) { return 1 << k; }

AttackCertificate make_certificate(CertificateSource source, const Sanfv& f, Sanfv g, int bound_h)
{
    AttackCertificate c;
    c.source = source;
    c.h = g * f;
    c.g = std::move(g);
    c.deg_g = c.g.degree();
    c.deg_h = c.h.degree();
    c.bound_h = bound_h;
    c.vanishing = c.h.is_zero();
    return c;
}

}  // namespace

std::string to_string(CertificateSource s)
{
    switch (s) {
    case CertificateSource::Thm3: return "thm3";
    case CertificateSource::Thm4: return "thm4";
    case CertificateSource::Thm5Annihilator: return "thm5-annihilator";
    case CertificateSource::Thm5Multiplier: return "thm5-multiplier";
    }
    return "unknown";
}

void verify(const AttackCertificate& c, const Sanfv& f)
{
    const std::string where = to_string(c.source) + " certificate for " + f.to_string();
    if (c.g * f != c.h) throw InvariantViolation(where + ": h != g f");
    if (c.deg_g != c.g.degree() || c.deg_h != c.h.degree()) throw InvariantViolation(where + ": stale degrees");
    if (c.vanishing != c.h.is_zero()) throw InvariantViolation(where + ": vanishing flag mismatch");
    if (!(c.deg_h <= c.bound_h)) throw InvariantViolation(where + ": deg(h) exceeds the promised bound");
    if (c.g.is_zero()) throw InvariantViolation(where + ": zero multiplier");
    switch (c.source) {
    case CertificateSource::Thm3:
        if (!(c.deg_g == 1)) throw InvariantViolation(where + ": g is not affine");
        break;
    case CertificateSource::Thm4:
        if (!(c.deg_g == *c.e)) throw InvariantViolation(where + ": deg(g) != e");
        break;
    case CertificateSource::Thm5Annihilator:
        if (!(c.deg_g <= pow2(*c.m - 1) - 1)) throw InvariantViolation(where + ": deg(g) too large");
        break;
    case CertificateSource::Thm5Multiplier:
        if (!(c.deg_h == c.bound_h)) throw InvariantViolation(where + ": deg(h) is not exactly 2^(m-1) + e");
        break;
    }
}

AttackCertificate thm3_multiplier(const Sanfv& f)
{
    const Degree d = f.degree();
    if (d.is_zero_function() || d.value() % 2 == 0)
        throw PreconditionError("thm3 needs odd degree, got " + d.to_string());
    const int t = (d.value() - 1) / 2;
    Sanfv g = sigma(f.n(), 1);
    g.set_coeff(0, !f.coeff(2 * t));
    AttackCertificate c = make_certificate(CertificateSource::Thm3, f, std::move(g), 2 * t - 1);
    c.e = 1;
    c.t = t;
    verify(c, f);
    return c;
}

Degree thm3_predicted_degree(const Sanfv& f)
{
    const Degree d = f.degree();
    if (d.is_zero_function() || d.value() % 2 == 0)
        throw PreconditionError("thm3 needs odd degree, got " + d.to_string());
    const int t = (d.value() - 1) / 2;
    const bool top_even = f.coeff(2 * t);
    for (int s = t - 1; s >= 0; --s) {
        const bool hit = top_even ? (f.coeff(2 * s) != f.coeff(2 * s + 1)) : f.coeff(2 * s);
        if (hit) return Degree(2 * s + 1);
    }
    return Degree::zero_function();
}

std::vector<AttackCertificate> thm4_multipliers(const Sanfv& f)
{
    std::vector<AttackCertificate> out;
    const Degree dd = f.degree();
    if (dd.is_zero_function() || dd.value() < 2) return out;
    const int d = dd.value();
    int last_e = 0;
    for (int k = 1; pow2(k) <= d; ++k) {
        const int e = d % pow2(k);
        if (e == 0 || e == last_e) continue;  // same e, same g
        last_e = e;
        const int t = d / pow2(k);
        Sanfv g = sigma(f.n(), e);
        for (int i = 0; i < e; ++i)
            if (f.coeff(t * pow2(k) + i)) g.set_coeff(i, !g.coeff(i));
        g.set_coeff(0, !g.coeff(0));
        AttackCertificate c = make_certificate(CertificateSource::Thm4, f, std::move(g), d - e - 1);
        c.e = e;
        c.t = t;
        c.k = k;
        verify(c, f);
        out.push_back(std::move(c));
    }
    return out;
}

bool thm5_applies(int n)
{
    if (n < 1) return false;
    const int m = floor_log2(static_cast<std::uint64_t>(n));
    return m >= 1 && n < pow2(m) + pow2(m - 1) - 1;
}

AttackCertificate thm5_certificate(const Sanfv& f, std::optional<int> e_override)
{
    const int n = f.n();
    if (!thm5_applies(n))
        throw PreconditionError("thm5 needs 2^m <= n < 2^m + 2^(m-1) - 1, got n = " + std::to_string(n));
    const int m = floor_log2(static_cast<std::uint64_t>(n));
    const int half = pow2(m - 1);
    const int e = e_override.value_or(n - pow2(m) + 1);
    if (e <= n - pow2(m) || e >= half)
        throw PreconditionError("thm5 needs n - 2^m < e < 2^(m-1), got e = " + std::to_string(e));

    const SplitForm s = split(f, m - 1);
    const Sanfv& upper = s.part(m - 1);
    const Sanfv sigma_e = sigma(n, e);
    const Sanfv g = sigma_e * complement(upper);

    AttackCertificate c;
    if (!g.is_zero()) {
        c = make_certificate(CertificateSource::Thm5Annihilator, f, g, half - 1);
        if (c.h != g * s.residue) throw InvariantViolation("thm5: g f != g f^- for " + f.to_string());
    } else {
        c = make_certificate(CertificateSource::Thm5Multiplier, f, sigma_e, half + e);
        if (c.h != sigma(n, half + e) + sigma_e * s.residue)
            throw InvariantViolation("thm5: sigma_e f has the wrong shape for " + f.to_string());
    }
    c.e = e;
    c.k = m - 1;
    c.m = m;
    verify(c, f);
    return c;
}

DerivedAnnihilator annihilator_from(const AttackCertificate& c)
{
    if (c.h.is_zero()) return {c.g, false};
    return {c.h, true};
}

std::vector<AttackCertificate> all_certificates(const Sanfv& f)
{
    std::vector<AttackCertificate> out;
    const Degree d = f.degree();
    if (!d.is_zero_function() && d.value() % 2 == 1) out.push_back(thm3_multiplier(f));
    for (auto& c : thm4_multipliers(f)) out.push_back(std::move(c));
    if (thm5_applies(f.n())) out.push_back(thm5_certificate(f));
    return out;
}

bool BoundReport::all_hold() const
{
    for (const auto& c : checks)
        if (c.applicable && !c.holds) return false;
    return true;
}

BoundReport bound_suite(const ImmunityProfile& p)
{
    BoundReport r;
    const int n = p.f.n();
    const int ai = p.ai;
    const int fai = p.fai;
    const bool has_deg = !p.deg.is_zero_function();
    const int deg = p.deg.value_or(0);
    auto add = [&](std::string name, bool applicable, bool holds, std::string detail) {
        r.checks.push_back({std::move(name), applicable, applicable ? holds : true, std::move(detail)});
    };

    add("ai_at_most_ceil_half_n", true, ai <= (n + 1) / 2,
        "ai=" + std::to_string(ai) + " <= " + std::to_string((n + 1) / 2));

    add("fai_at_most_twice_ai", true, fai <= 2 * ai, "fai=" + std::to_string(fai) + " <= " + std::to_string(2 * ai));

    add("sandwich", ai >= 1 && deg >= 1, ai + 1 <= fai && fai <= deg + 2,
        std::to_string(ai + 1) + " <= fai=" + std::to_string(fai) + " <= " + std::to_string(deg + 2));

    {
        const bool app = has_deg && deg >= 1;
        const int cap = app ? pow2(floor_log2(static_cast<std::uint64_t>(deg))) : 0;
        add("ai_at_most_pow2_floor_log2_deg", app, ai <= cap, "ai=" + std::to_string(ai) + " <= " + std::to_string(cap));
        add("ai_below_pow2_floor_log2_deg_when_deg_not_pow2", app && !is_power_of_two(deg), ai < cap,
            "ai=" + std::to_string(ai) + " < " + std::to_string(cap));
    }

    {
        const bool app = ai >= 1;
        const int low = app ? pow2(ceil_log2(static_cast<std::uint64_t>(ai))) : 0;
        add("deg_at_least_pow2_ceil_log2_ai", app, has_deg && deg >= low,
            "deg=" + p.deg.to_string() + " >= " + std::to_string(low));
    }

    {
        const bool app = n >= 2 && ai == (n + 1) / 2;
        const int low = app ? pow2(floor_log2(static_cast<std::uint64_t>(n - 1))) : 0;
        add("mai_deg_at_least_pow2_floor_log2_n_minus_1", app, has_deg && deg >= low,
            "deg=" + p.deg.to_string() + " >= " + std::to_string(low));
    }

    add("fai_below_deg_when_deg_not_pow2", deg > 1 && !is_power_of_two(deg), fai <= deg - 1,
        "fai=" + std::to_string(fai) + " <= " + std::to_string(deg - 1));

    {
        const bool app = thm5_applies(n);
        int cap = 0;
        if (app) {
            const int m = floor_log2(static_cast<std::uint64_t>(n));
            cap = std::max(pow2(m) - 2, 2 * n - 3 * pow2(m - 1) + 2);
        }
        add("fai_window_bound", app, fai <= cap, "fai=" + std::to_string(fai) + " <= " + std::to_string(cap));
    }

    // Only the non-strict form: on 6 variables sigma_4 (plus any of 1, sigma_1,
    // sigma_3) reaches fai = 6.
    add("fai_at_most_n", n >= 5, fai <= n, "fai=" + std::to_string(fai) + " <= " + std::to_string(n));
    return r;
}

GapStatistic expectation_statistic(int n, std::uint64_t samples, std::uint64_t seed)
{
    if (n < 1 || n % 2 == 0) throw PreconditionError("expectation statistic needs odd n, got " + std::to_string(n));
    if (n > kMaxSanfvVars) throw RangeError("n too large");
    GapStatistic st;
    st.n = n;
    st.samples = samples;
    st.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        Sanfv f(n);
        std::uint64_t word = 0;
        for (int i = 0; i < n; ++i) {
            if (i % 64 == 0) word = rng();
            f.set_coeff(i, (word >> (i % 64)) & 1u);
        }
        f.set_coeff(n, true);
        const AttackCertificate c = thm3_multiplier(f);
        st.gap_sum += c.vanishing ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n - c.deg_h.value());
    }
    return st;
}

}  // namespace symbool
