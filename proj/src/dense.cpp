#include "symbool/dense.hpp"

#include <bit>

#include "symbool/errors.hpp"
#include "symbool/gf2.hpp"

namespace symbool {

namespace {

void check_dense_n(int n)
{
    if (n < 1 || n > kMaxDenseVars)
        throw CapabilityError("dense tables support 1 <= n <= " + std::to_string(kMaxDenseVars) + ", got " +
                              std::to_string(n));
}

std::size_t table_size(int n) { return std::size_t{1} << n; }

BitVector monomial_table(int n, std::uint32_t mask)
{
    BitVector t(table_size(n));
    for (std::uint32_t x = 0; x < table_size(n); ++x)
        if ((x & mask) == mask) t.set(x);
    return t;
}

BitVector degree_above_mask(int n, int d)
{
    BitVector t(table_size(n));
    for (std::uint32_t c = 0; c < table_size(n); ++c)
        if (std::popcount(c) > d) t.set(c);
    return t;
}

DenseAnf anf_from_tag(int n, const std::vector<std::uint32_t>& monos, const BitVector& tag)
{
    DenseAnf g(n);
    for (std::size_t j = tag.find_first(); j != BitVector::npos; j = tag.find_next(j)) g.coeffs().flip(monos[j]);
    return g;
}

// Images ANF(m_c * f) for every monomial m_c of degree <= e.
struct MultiplierSystem {
    const DenseBooleanFunction* f = nullptr;
    int e = 0;
    std::vector<std::uint32_t> monos;
    std::vector<BitVector> images;
};

MultiplierSystem build_system(const DenseBooleanFunction& f, int e)
{
    MultiplierSystem sys;
    sys.f = &f;
    sys.e = e;
    sys.monos = graded_monomials(f.n(), e);
    sys.images.reserve(sys.monos.size());
    for (auto c : sys.monos) {
        BitVector prod = monomial_table(f.n(), c) & f.truth_table();
        moebius_in_place(prod, f.n());
        sys.images.push_back(std::move(prod));
    }
    return sys;
}

bool feasible(const MultiplierSystem& sys, int d, Multiplier* witness)
{
    const int n = sys.f->n();
    const BitVector high = degree_above_mask(n, d);
    EchelonBasis basis(table_size(n), sys.monos.size(), EchelonBasis::Pivot::Lowest);
    for (std::size_t j = 0; j < sys.monos.size(); ++j) {
        auto ins = basis.insert(sys.images[j] & high);
        if (ins.independent || j == 0) continue;
        if (witness) {
            Multiplier w;
            w.d = d;
            w.g = anf_from_tag(n, sys.monos, ins.tag);
            auto h = dense_mul(inverse_moebius(w.g), *sys.f);
            w.h = moebius(h);
            w.vanishing = w.h.is_zero();
            if (w.g.is_constant() || !(anf_degree(w.g) <= sys.e) || !(anf_degree(w.h) <= d))
                throw InvariantViolation("multiplier witness failed re-verification");
            *witness = std::move(w);
        }
        return true;
    }
    return false;
}

}  // namespace

DenseBooleanFunction::DenseBooleanFunction(int n) : n_(n), tt_((check_dense_n(n), table_size(n))) {}

DenseBooleanFunction::DenseBooleanFunction(int n, BitVector truth_table) : n_(n), tt_(std::move(truth_table))
{
    check_dense_n(n);
    if (tt_.size() != table_size(n)) throw DimensionError("truth table length must be 2^n");
}

DenseBooleanFunction DenseBooleanFunction::from_sanfv(const Sanfv& f)
{
    check_dense_n(f.n());
    const WeightValueVector v = to_values(f);
    BitVector tt(table_size(f.n()));
    for (std::uint32_t x = 0; x < tt.size(); ++x)
        if (v.at(std::popcount(x))) tt.set(x);
    return DenseBooleanFunction(f.n(), std::move(tt));
}

DenseAnf::DenseAnf(int n) : n_(n), coeffs_((check_dense_n(n), table_size(n))) {}

DenseAnf::DenseAnf(int n, BitVector coeffs) : n_(n), coeffs_(std::move(coeffs))
{
    check_dense_n(n);
    if (coeffs_.size() != table_size(n)) throw DimensionError("ANF length must be 2^n");
}

DenseAnf DenseAnf::monomial(int n, std::uint32_t mask)
{
    DenseAnf a(n);
    if (mask >= table_size(n)) throw RangeError("monomial mask out of range");
    a.coeffs_.set(mask);
    return a;
}

bool DenseAnf::is_constant() const
{
    const std::size_t first = coeffs_.find_next(0);
    return first == BitVector::npos;
}

void moebius_in_place(BitVector& table, int n)
{
    using Word = BitVector::Word;
    static constexpr Word kHigh[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    Word* w = table.data();
    const std::size_t words = table.word_count();
    for (int i = 0; i < n && i < 6; ++i) {
        const unsigned s = 1u << i;
        for (std::size_t k = 0; k < words; ++k) w[k] ^= (w[k] << s) & kHigh[i];
    }
    for (int i = 6; i < n; ++i) {
        const std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t k = 0; k < words; ++k)
            if (k & stride) w[k] ^= w[k ^ stride];
    }
}

DenseAnf moebius(const DenseBooleanFunction& f)
{
    BitVector t = f.truth_table();
    moebius_in_place(t, f.n());
    return DenseAnf(f.n(), std::move(t));
}

DenseBooleanFunction inverse_moebius(const DenseAnf& a)
{
    BitVector t = a.coeffs();
    moebius_in_place(t, a.n());
    return DenseBooleanFunction(a.n(), std::move(t));
}

Degree anf_degree(const DenseAnf& a)
{
    int best = -1;
    const BitVector& c = a.coeffs();
    for (std::size_t m = c.find_first(); m != BitVector::npos; m = c.find_next(m))
        best = std::max(best, std::popcount(static_cast<std::uint32_t>(m)));
    return best < 0 ? Degree::zero_function() : Degree(best);
}

Degree dense_degree(const DenseBooleanFunction& f) { return anf_degree(moebius(f)); }

DenseBooleanFunction dense_mul(const DenseBooleanFunction& f, const DenseBooleanFunction& g)
{
    if (f.n() != g.n()) throw DimensionError("dense operands on different variable counts");
    return DenseBooleanFunction(f.n(), f.truth_table() & g.truth_table());
}

DenseBooleanFunction dense_add(const DenseBooleanFunction& f, const DenseBooleanFunction& g)
{
    if (f.n() != g.n()) throw DimensionError("dense operands on different variable counts");
    return DenseBooleanFunction(f.n(), f.truth_table() ^ g.truth_table());
}

DenseBooleanFunction dense_complement(const DenseBooleanFunction& f)
{
    return DenseBooleanFunction(f.n(), ~f.truth_table());
}

std::vector<std::uint32_t> graded_monomials(int n, int max_degree)
{
    std::vector<std::uint32_t> out;
    const std::uint32_t limit = static_cast<std::uint32_t>(table_size(n));
    for (int d = 0; d <= std::min(max_degree, n); ++d) {
        if (d == 0) {
            out.push_back(0);
            continue;
        }
        // Gosper's hack enumerates d-subsets in ascending order.
        for (std::uint32_t c = (1u << d) - 1; c < limit;) {
            out.push_back(c);
            const std::uint32_t low = c & (~c + 1);
            const std::uint32_t ripple = c + low;
            c = (((ripple ^ c) >> 2) / low) | ripple;
        }
    }
    return out;
}

std::string monomial_name(std::uint32_t mask)
{
    if (mask == 0) return "1";
    std::string s;
    for (int i = 0; i < 32; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
    }
    return s;
}

std::vector<std::string> monomial_list(const DenseAnf& a)
{
    std::vector<std::string> out;
    for (auto c : graded_monomials(a.n(), a.n()))
        if (a.coeff(c)) out.push_back(monomial_name(c));
    return out;
}

Annihilator min_annihilator_degree(const DenseBooleanFunction& f)
{
    const int n = f.n();
    std::vector<std::uint32_t> support;
    for (std::uint32_t x = 0; x < table_size(n); ++x)
        if (f.at(x)) support.push_back(x);
    if (support.size() == table_size(n))
        throw DomainError("the constant-1 function has no annihilator");

    for (int d = 0; d <= n; ++d) {
        const auto monos = graded_monomials(n, d);
        EchelonBasis basis(support.size(), monos.size(), EchelonBasis::Pivot::Lowest);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            BitVector column(support.size());
            for (std::size_t r = 0; r < support.size(); ++r)
                if ((support[r] & monos[j]) == monos[j]) column.set(r);
            auto ins = basis.insert(std::move(column));
            if (ins.independent) continue;
            Annihilator out;
            out.degree = d;
            out.g = anf_from_tag(n, monos, ins.tag);
            if (out.g.is_zero() || !dense_mul(inverse_moebius(out.g), f).truth_table().none())
                throw InvariantViolation("annihilator witness failed re-verification");
            return out;
        }
    }
    throw InvariantViolation("no annihilator found for a function with nonempty zero set");
}

Annihilator dense_ai(const DenseBooleanFunction& f)
{
    const bool all_ones = f.truth_table().count() == table_size(f.n());
    const bool all_zeros = f.truth_table().none();
    if (all_ones) {
        Annihilator a = min_annihilator_degree(dense_complement(f));
        a.of_complement = true;
        return a;
    }
    Annihilator a = min_annihilator_degree(f);
    if (all_zeros) return a;
    Annihilator b = min_annihilator_degree(dense_complement(f));
    if (b.degree < a.degree) {
        b.of_complement = true;
        return b;
    }
    return a;
}

bool multiplier_feasible(const DenseBooleanFunction& f, int e, int d, Multiplier* witness)
{
    if (e < 1 || e >= f.n()) throw RangeError("multiplier degree e must satisfy 1 <= e < n");
    if (d < 0) throw RangeError("product degree bound must be nonnegative");
    return feasible(build_system(f, e), d, witness);
}

Multiplier min_multiplier_degree(const DenseBooleanFunction& f, int e)
{
    if (e < 1 || e >= f.n()) throw RangeError("multiplier degree e must satisfy 1 <= e < n");
    const MultiplierSystem sys = build_system(f, e);
    Multiplier best;
    int hi = f.n() - e;
    if (!feasible(sys, hi, &best)) throw InvariantViolation("no multiplier at d = n - e");
    int lo = 0;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        Multiplier w;
        if (feasible(sys, mid, &w)) {
            hi = mid;
            best = std::move(w);
        } else {
            lo = mid + 1;
        }
    }
    // Monotone in d: one below the minimum must fail.
    if (lo > 0 && feasible(sys, lo - 1, nullptr)) throw InvariantViolation("multiplier feasibility not monotone in d");
    best.d = lo;
    return best;
}

DenseFai dense_fai(const DenseBooleanFunction& f)
{
    DenseFai out;
    const Annihilator ann = dense_ai(f);
    out.ai = ann.degree;
    out.fai = 2 * out.ai;
    out.g = ann.g;
    out.h = ann.of_complement ? ann.g : DenseAnf(f.n());
    int previous_d = f.n();
    for (int e = 1; e < out.ai; ++e) {
        Multiplier m = min_multiplier_degree(f, e);
        if (m.vanishing) throw InvariantViolation("product vanished below the algebraic immunity");
        if (m.d > previous_d) throw InvariantViolation("minimal product degree increased with e");
        previous_d = m.d;
        if (e + m.d < out.fai) {
            out.fai = e + m.d;
            out.g = std::move(m.g);
            out.h = std::move(m.h);
        }
    }
    out.capped = out.fai == 2 * out.ai;
    return out;
}

bool dense_is_aar(const DenseBooleanFunction& f)
{
    const DenseFai r = dense_fai(f);
    return r.ai == (f.n() + 1) / 2 && r.fai >= f.n();
}

}  // namespace symbool
