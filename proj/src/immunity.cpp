#include "symbool/immunity.hpp"

#include <bit>
#include <optional>

#include "symbool/errors.hpp"
#include "symbool/gf2.hpp"

namespace symbool {

namespace {

void check_exact_n(int n)
{
    if (n > kMaxDenseVars)
        throw CapabilityError("exact immunity computations support n <= " + std::to_string(kMaxDenseVars) + ", got " +
                              std::to_string(n));
}

// All n-bit points of Hamming weight k, ascending.
void append_weight_class(int n, int k, std::vector<std::uint32_t>& out)
{
    if (k == 0) {
        out.push_back(0);
        return;
    }
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t x = (1u << k) - 1; x < limit;) {
        out.push_back(x);
        const std::uint32_t low = x & (~x + 1);
        const std::uint32_t ripple = x + low;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
}

// One side of the annihilator search: rows are the points of the weight
// classes where the side's function is 1.
class AnnihilatorSide {
public:
    AnnihilatorSide(int n, const WeightValueVector& v, bool value, std::size_t max_columns)
    {
        for (int k = 0; k <= n; ++k) {
            if (v.at(k) != value) continue;
            class_start_.push_back({k, points_.size()});
            append_weight_class(n, k, points_);
        }
        basis_.emplace(points_.size(), max_columns, EchelonBasis::Pivot::Lowest);
    }

    // Adds a monomial column; returns the dependency tag when it closes a kernel vector.
    std::optional<BitVector> add(std::uint32_t mask)
    {
        BitVector column(points_.size());
        const int w = std::popcount(mask);
        for (const auto& [k, start] : class_start_) {
            if (k < w) continue;  // a weight-k point cannot cover a larger monomial
            const std::size_t end = next_start(start);
            for (std::size_t r = start; r < end; ++r)
                if ((points_[r] & mask) == mask) column.set(r);
        }
        auto ins = basis_->insert(std::move(column));
        if (ins.independent) return std::nullopt;
        return std::move(ins.tag);
    }

private:
    std::size_t next_start(std::size_t start) const
    {
        for (const auto& cs : class_start_)
            if (cs.second > start) return cs.second;
        return points_.size();
    }

    std::vector<std::uint32_t> points_;
    std::vector<std::pair<int, std::size_t>> class_start_;
    std::optional<EchelonBasis> basis_;
};

DenseAnf anf_from_tag(int n, const std::vector<std::uint32_t>& monos, const BitVector& tag)
{
    DenseAnf g(n);
    for (std::size_t j = tag.find_first(); j != BitVector::npos; j = tag.find_next(j)) g.coeffs().flip(monos[j]);
    return g;
}

DenseAnf product_anf(const DenseAnf& g, const DenseBooleanFunction& f)
{
    return moebius(dense_mul(inverse_moebius(g), f));
}

struct EchelonScan {
    // d_min[e] for e = 1..max_e; index 0 unused.
    std::vector<int> d_min;
    std::vector<DenseAnf> g;
};

// Inserts the products m_c f for all monomials of degree <= max_e, with
// coordinates permuted to graded order so the highest set position is the
// leading monomial.
EchelonScan echelon_scan(const DenseBooleanFunction& fd, int max_e)
{
    const int n = fd.n();
    const std::size_t size = std::size_t{1} << n;
    const auto order = graded_monomials(n, n);
    std::vector<std::uint32_t> position(size);
    for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<std::uint32_t>(p);

    const auto monos = graded_monomials(n, max_e);
    EchelonBasis basis(size, monos.size(), EchelonBasis::Pivot::Highest);

    EchelonScan scan;
    scan.d_min.assign(static_cast<std::size_t>(max_e) + 1, n + 1);
    scan.g.assign(static_cast<std::size_t>(max_e) + 1, DenseAnf(n));

    int best_d = n + 1;
    BitVector best_tag;
    std::size_t j = 0;
    for (int e = 0; e <= max_e; ++e) {
        for (; j < monos.size() && std::popcount(monos[j]) == e; ++j) {
            BitVector prod(size);
            for (std::uint32_t x = 0; x < size; ++x)
                if ((x & monos[j]) == monos[j] && fd.at(x)) prod.set(x);
            moebius_in_place(prod, n);
            BitVector graded(size);
            for (std::size_t c = prod.find_first(); c != BitVector::npos; c = prod.find_next(c)) graded.set(position[c]);

            auto ins = basis.insert(std::move(graded));
            if (!ins.independent)
                throw InvariantViolation("annihilator of degree " + std::to_string(e) +
                                         " found below the algebraic immunity");
            if (j == 0) continue;  // g = 1
            const int d = std::popcount(order[ins.pivot]);
            if (d < best_d) {
                best_d = d;
                best_tag = ins.tag;
            }
        }
        if (e >= 1) {
            scan.d_min[static_cast<std::size_t>(e)] = best_d;
            scan.g[static_cast<std::size_t>(e)] = anf_from_tag(n, monos, best_tag);
        }
    }
    return scan;
}

}  // namespace

AiResult ai_symmetric(const Sanfv& f)
{
    const int n = f.n();
    check_exact_n(n);
    const WeightValueVector v = to_values(f);
    const int cap = (n + 1) / 2;
    const auto monos = graded_monomials(n, cap);

    AnnihilatorSide on_f(n, v, true, monos.size());
    AnnihilatorSide on_complement(n, v, false, monos.size());

    std::size_t j = 0;
    for (int d = 0; d <= cap; ++d) {
        std::optional<BitVector> tag_f;
        std::optional<BitVector> tag_c;
        for (; j < monos.size() && std::popcount(monos[j]) == d; ++j) {
            if (!tag_f) tag_f = on_f.add(monos[j]);
            if (!tag_c) tag_c = on_complement.add(monos[j]);
            if (tag_f) break;
        }
        if (!tag_f && !tag_c) continue;

        AiResult r;
        r.ai = d;
        r.of_complement = !tag_f;
        r.witness = anf_from_tag(n, monos, tag_f ? *tag_f : *tag_c);
        const DenseBooleanFunction fd = DenseBooleanFunction::from_sanfv(r.of_complement ? complement(f) : f);
        if (r.witness.is_zero() || !(anf_degree(r.witness) <= d) ||
            dense_mul(inverse_moebius(r.witness), fd).truth_table().any())
            throw InvariantViolation("symmetric annihilator witness failed re-verification for " + f.to_string());
        return r;
    }
    throw InvariantViolation("no annihilator of degree <= ceil(n/2) for " + f.to_string());
}

namespace {

FaiResult fai_given_ai(const Sanfv& f, const AiResult& a)
{
    const DenseBooleanFunction fd = DenseBooleanFunction::from_sanfv(f);

    FaiResult r;
    r.ai = a.ai;
    r.fai = 2 * a.ai;
    r.g = a.witness;
    r.h = a.of_complement ? a.witness : DenseAnf(f.n());

    if (a.ai >= 2) {
        const EchelonScan scan = echelon_scan(fd, a.ai - 1);
        int attained_e = 0;
        for (int e = 1; e < a.ai; ++e) {
            const int total = e + scan.d_min[static_cast<std::size_t>(e)];
            if (total < r.fai) {
                r.fai = total;
                attained_e = e;
            }
        }
        if (attained_e > 0) {
            const auto idx = static_cast<std::size_t>(attained_e);
            r.g = scan.g[idx];
            r.h = product_anf(r.g, fd);
            if (r.g.is_constant() || !(anf_degree(r.g) <= attained_e) ||
                !(anf_degree(r.h) == scan.d_min[idx]))
                throw InvariantViolation("multiplier witness failed re-verification for " + f.to_string());
        }
    }
    r.capped = r.fai == 2 * r.ai;
    return r;
}

}  // namespace

FaiResult fai(const Sanfv& f)
{
    check_exact_n(f.n());
    return fai_given_ai(f, ai_symmetric(f));
}

int min_d_for_e(const Sanfv& f, int e)
{
    check_exact_n(f.n());
    const AiResult a = ai_symmetric(f);
    if (e < 1 || e >= a.ai)
        throw RangeError("e = " + std::to_string(e) + " outside [1, AI(f)) = [1, " + std::to_string(a.ai) + ")");
    const EchelonScan scan = echelon_scan(DenseBooleanFunction::from_sanfv(f), e);
    return scan.d_min[static_cast<std::size_t>(e)];
}

bool is_aar(const Sanfv& f)
{
    const FaiResult r = fai(f);
    return r.ai == (f.n() + 1) / 2 && r.fai >= f.n();
}

ImmunityProfile profile(const Sanfv& f)
{
    check_exact_n(f.n());
    const AiResult a = ai_symmetric(f);
    const FaiResult r = fai_given_ai(f, a);
    ImmunityProfile p;
    p.f = f;
    p.deg = f.degree();
    p.ai = r.ai;
    p.fai = r.fai;
    p.fai_g = r.g;
    p.fai_h = r.h;
    p.capped = r.capped;
    p.ai_witness = a.witness;
    p.ai_witness_of_complement = a.of_complement;
    if (p.ai > (f.n() + 1) / 2) throw InvariantViolation("AI above ceil(n/2) for " + f.to_string());
    return p;
}

}  // namespace symbool
