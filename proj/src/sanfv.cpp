#include "symbool/sanfv.hpp"

#include <algorithm>
#include <bit>

namespace symbool {

namespace {

void check_n(int n)
{
    if (n < 1 || n > kMaxSanfvVars)
        throw RangeError("variable count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxSanfvVars) + "]");
}

void check_same_n(const Sanfv& f, const Sanfv& g)
{
    if (f.n() != g.n())
        throw DimensionError("operands on " + std::to_string(f.n()) + " and " + std::to_string(g.n()) + " variables");
}

// In-place subset-sum transform over F2 on indices 0..n: out(k) = sum_{i subset of k} in(i).
// Indices above n never influence indices <= n, so the array need not be padded.
void subset_sum_transform(BitVector& bits)
{
    const std::size_t len = bits.size();
    for (std::size_t b = 1; b < len; b <<= 1)
        for (std::size_t k = b; k < len; ++k)
            if ((k & b) && bits.test(k ^ b)) bits.flip(k);
}

}  // namespace

int floor_log2(std::uint64_t n)
{
    if (n == 0) throw RangeError("log2 of zero");
    return static_cast<int>(std::bit_width(n)) - 1;
}

int ceil_log2(std::uint64_t n)
{
    if (n == 0) throw RangeError("log2 of zero");
    return n == 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

Sanfv::Sanfv(int n) : n_(n), lambda_(static_cast<std::size_t>(n) + 1) { check_n(n); }

Sanfv::Sanfv(int n, BitVector lambda) : n_(n), lambda_(std::move(lambda))
{
    check_n(n);
    if (lambda_.size() != static_cast<std::size_t>(n) + 1)
        throw DimensionError("SANFV on " + std::to_string(n) + " variables needs " + std::to_string(n + 1) +
                             " coefficients, got " + std::to_string(lambda_.size()));
}

Sanfv Sanfv::from_string(std::string_view bits)
{
    if (bits.size() < 2) throw ParseError("SANFV string needs at least 2 coefficients");
    return Sanfv(static_cast<int>(bits.size()) - 1, BitVector::from_string(bits));
}

Sanfv Sanfv::from_mask(int n, std::uint64_t mask)
{
    if (n >= 63) throw RangeError("from_mask requires n < 63");
    Sanfv f(n);
    for (int i = 0; i <= n; ++i)
        if ((mask >> i) & 1u) f.set_coeff(i, true);
    return f;
}

void Sanfv::set_coeff(int i, bool value)
{
    if (i < 0 || i > n_) throw RangeError("sigma index " + std::to_string(i) + " outside [0, " + std::to_string(n_) + "]");
    lambda_.set(static_cast<std::size_t>(i), value);
}

Degree Sanfv::degree() const
{
    const std::size_t top = lambda_.find_last();
    return top == BitVector::npos ? Degree::zero_function() : Degree(static_cast<int>(top));
}

WeightValueVector::WeightValueVector(int n) : n_(n), values_(static_cast<std::size_t>(n) + 1) { check_n(n); }

WeightValueVector::WeightValueVector(int n, BitVector values) : n_(n), values_(std::move(values))
{
    check_n(n);
    if (values_.size() != static_cast<std::size_t>(n) + 1)
        throw DimensionError("value vector on " + std::to_string(n) + " variables needs " + std::to_string(n + 1) +
                             " entries, got " + std::to_string(values_.size()));
}

WeightValueVector WeightValueVector::from_string(std::string_view text)
{
    if (text.starts_with("v:")) text.remove_prefix(2);
    if (text.size() < 2) throw ParseError("value vector string needs at least 2 entries");
    return WeightValueVector(static_cast<int>(text.size()) - 1, BitVector::from_string(text));
}

Sanfv sigma(int n, int i)
{
    Sanfv f(n);
    f.set_coeff(i, true);
    return f;
}

Sanfv constant(int n, bool value)
{
    Sanfv f(n);
    f.set_coeff(0, value);
    return f;
}

WeightValueVector to_values(const Sanfv& f)
{
    BitVector bits = f.lambda();
    subset_sum_transform(bits);
    return WeightValueVector(f.n(), std::move(bits));
}

Sanfv to_sanfv(const WeightValueVector& v)
{
    BitVector bits = v.values();
    subset_sum_transform(bits);
    return Sanfv(v.n(), std::move(bits));
}

Sanfv add(const Sanfv& f, const Sanfv& g)
{
    check_same_n(f, g);
    return Sanfv(f.n(), f.lambda() ^ g.lambda());
}

Sanfv mul(const Sanfv& f, const Sanfv& g)
{
    check_same_n(f, g);
    const std::size_t n = static_cast<std::size_t>(f.n());
    BitVector out(n + 1);
    const BitVector& a = f.lambda();
    const BitVector& b = g.lambda();
    for (std::size_t i = a.find_first(); i != BitVector::npos; i = a.find_next(i))
        for (std::size_t j = b.find_first(); j != BitVector::npos; j = b.find_next(j))
            if ((i | j) <= n) out.flip(i | j);
    return Sanfv(f.n(), std::move(out));
}

Sanfv complement(const Sanfv& f)
{
    Sanfv out = f;
    out.set_coeff(0, !f.coeff(0));
    return out;
}

Sanfv lemma1_expand(int i, int j, int n)
{
    check_n(n);
    if (i < 0 || i > n || j < 0 || j > n)
        throw RangeError("sigma indices (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [0, " +
                         std::to_string(n) + "]");
    Sanfv out(n);
    const int top = std::min(j + i, n);
    for (int k = j; k <= top; ++k) {
        const auto uk = static_cast<std::uint64_t>(k);
        const bool c = binom_parity(uk, static_cast<std::uint64_t>(i)) &&
                       binom_parity(static_cast<std::uint64_t>(i), uk - static_cast<std::uint64_t>(j));
        if (c) out.set_coeff(k, true);
    }
    return out;
}

Degree degree(const Sanfv& f) { return f.degree(); }

DecomposedForm decompose(const Sanfv& f)
{
    const int m = floor_log2(static_cast<std::uint64_t>(f.n()));
    DecomposedForm d;
    d.variables = m + 1;
    d.anf = BitVector(std::size_t{1} << d.variables);
    const BitVector& lam = f.lambda();
    for (std::size_t j = lam.find_first(); j != BitVector::npos; j = lam.find_next(j)) d.anf.set(j);
    return d;
}

Sanfv compose(const DecomposedForm& d, int n)
{
    check_n(n);
    const std::size_t len = d.anf.size();
    if (len == 0 || !std::has_single_bit(len) || len != (std::size_t{1} << d.variables))
        throw DimensionError("ANF length must be 2^variables");
    Sanfv out(n);
    for (std::size_t j = d.anf.find_first(); j != BitVector::npos; j = d.anf.find_next(j)) {
        if (j > static_cast<std::size_t>(n))
            throw DomainError("monomial " + std::to_string(j) + " maps to sigma_" + std::to_string(j) +
                              ", which does not exist on " + std::to_string(n) + " variables");
        out.set_coeff(static_cast<int>(j), true);
    }
    return out;
}

SplitForm split(const Sanfv& f, int k)
{
    const int m = floor_log2(static_cast<std::uint64_t>(f.n()));
    if (k < 1 || k > m) throw RangeError("split level " + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");
    SplitForm s;
    s.k = k;
    s.m = m;
    s.parts.assign(static_cast<std::size_t>(m - k + 1), Sanfv(f.n()));
    s.residue = Sanfv(f.n());
    const BitVector& lam = f.lambda();
    for (std::size_t j = lam.find_first(); j != BitVector::npos; j = lam.find_next(j)) {
        const int top = j == 0 ? -1 : floor_log2(j);
        if (top < k)
            s.residue.set_coeff(static_cast<int>(j), true);
        else
            s.parts[static_cast<std::size_t>(top - k)].set_coeff(static_cast<int>(j - (std::size_t{1} << top)), true);
    }
    return s;
}

Sanfv recombine(const SplitForm& s)
{
    Sanfv out = s.residue;
    for (int i = s.k; i <= s.m; ++i) out = out + sigma(out.n(), 1 << i) * s.part(i);
    return out;
}

bool evaluate(const Sanfv& f, std::span<const std::uint8_t> x)
{
    if (x.size() != static_cast<std::size_t>(f.n()))
        throw DimensionError("input of length " + std::to_string(x.size()) + " for a function on " +
                             std::to_string(f.n()) + " variables");
    int weight = 0;
    for (auto bit : x) weight += bit ? 1 : 0;
    return evaluate_at_weight(f, weight);
}

bool evaluate_at_weight(const Sanfv& f, int weight)
{
    if (weight < 0 || weight > f.n()) throw RangeError("weight outside [0, n]");
    // v(k) = sum over i subset of k of lambda(i)
    bool acc = false;
    const auto k = static_cast<unsigned>(weight);
    for (unsigned i = k;; i = (i - 1) & k) {
        acc ^= f.coeff(static_cast<int>(i));
        if (i == 0) break;
    }
    return acc;
}

Sanfv majority(int n)
{
    check_n(n);
    if (n % 2 == 0)
        throw PreconditionError("majority is only defined here for odd n; use threshold(n, k) for even n");
    return threshold(n, n / 2 + 1);
}

Sanfv threshold(int n, int k)
{
    check_n(n);
    if (k < 0 || k > n + 1) throw RangeError("threshold outside [0, n+1]");
    WeightValueVector v(n);
    for (int w = k; w <= n; ++w) v.set(w, true);
    return to_sanfv(v);
}

}  // namespace symbool
