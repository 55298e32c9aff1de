#pragma once

// Symmetric Boolean functions in simplified ANF form.
//
// A symmetric f on n variables is written f = sum_i lambda(i) sigma_i, where
// sigma_i is the i-th elementary symmetric function. The coefficient vector
// lambda has n+1 entries, index 0 first. Equivalently f is determined by its
// value vector v, v(k) = f(x) for any x of Hamming weight k. Both forms use
// the text format "0101..." (leftmost = index 0); value vectors carry a "v:"
// prefix.
//
// Products of sigma's follow the OR rule sigma_i sigma_j = sigma_{i|j}, with
// sigma_k = 0 whenever k > n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbool/bitvector.hpp"
#include "symbool/degree.hpp"

namespace symbool {

// Largest supported variable count for SANFV arithmetic.
inline constexpr int kMaxSanfvVars = 1 << 16;

// C(k, i) mod 2 via Lucas: odd iff the bits of i are a subset of those of k.
constexpr bool binom_parity(std::uint64_t k, std::uint64_t i) { return (i & k) == i; }

// floor(log2 n) for n >= 1.
int floor_log2(std::uint64_t n);
// ceil(log2 n) for n >= 1.
int ceil_log2(std::uint64_t n);

class Sanfv {
public:
    // The zero function on n variables.
    explicit Sanfv(int n);
    Sanfv(int n, BitVector lambda);

    static Sanfv from_string(std::string_view bits);
    // Bits of `mask` (bit i = lambda(i)); requires n < 64.
    static Sanfv from_mask(int n, std::uint64_t mask);

    int n() const { return n_; }
    bool coeff(int i) const { return lambda_.test(static_cast<std::size_t>(i)); }
    void set_coeff(int i, bool value);
    const BitVector& lambda() const { return lambda_; }

    Degree degree() const;
    bool is_zero() const { return lambda_.none(); }

    std::string to_string() const { return lambda_.to_string(); }

    bool operator==(const Sanfv&) const = default;

private:
    int n_;
    BitVector lambda_;
};

class WeightValueVector {
public:
    explicit WeightValueVector(int n);
    WeightValueVector(int n, BitVector values);

    // Accepts the "v:" prefixed form or a bare bit string.
    static WeightValueVector from_string(std::string_view text);

    int n() const { return n_; }
    bool at(int weight) const { return values_.test(static_cast<std::size_t>(weight)); }
    void set(int weight, bool value) { values_.set(static_cast<std::size_t>(weight), value); }
    const BitVector& values() const { return values_; }

    std::string to_string() const { return "v:" + values_.to_string(); }

    bool operator==(const WeightValueVector&) const = default;

private:
    int n_;
    BitVector values_;
};

// F_{m+1} in B_{m+1} with f = F(sigma_1, sigma_2, sigma_4, ..., sigma_{2^m}).
// anf bit j is the coefficient of y_1^{j_0} ... y_{m+1}^{j_m}.
struct DecomposedForm {
    int variables = 0;  // m+1
    BitVector anf;      // length 2^variables

    bool operator==(const DecomposedForm&) const = default;
};

// f = sum_{i=k..m} sigma_{2^i} parts[i-k] + residue.
struct SplitForm {
    int k = 0;
    int m = 0;
    std::vector<Sanfv> parts;  // f_k, ..., f_m; deg(f_i) <= 2^i - 1
    Sanfv residue{1};          // deg <= 2^k - 1

    const Sanfv& part(int i) const { return parts.at(static_cast<std::size_t>(i - k)); }
};

Sanfv sigma(int n, int i);
Sanfv constant(int n, bool value);

WeightValueVector to_values(const Sanfv& f);
Sanfv to_sanfv(const WeightValueVector& v);

Sanfv add(const Sanfv& f, const Sanfv& g);
Sanfv mul(const Sanfv& f, const Sanfv& g);
inline Sanfv operator+(const Sanfv& f, const Sanfv& g) { return add(f, g); }
inline Sanfv operator*(const Sanfv& f, const Sanfv& g) { return mul(f, g); }
// f + 1
Sanfv complement(const Sanfv& f);

// sigma_i sigma_j expanded coefficient-wise as sum_k C(k,i) C(i,k-j) sigma_k.
// Independent of mul(); kept for cross-validation.
Sanfv lemma1_expand(int i, int j, int n);

Degree degree(const Sanfv& f);

DecomposedForm decompose(const Sanfv& f);
// Inverse of decompose. Accepts any ANF length 2^k; every set bit must index
// an existing sigma_j (j <= n).
Sanfv compose(const DecomposedForm& d, int n);

SplitForm split(const Sanfv& f, int k);
Sanfv recombine(const SplitForm& s);

bool evaluate(const Sanfv& f, std::span<const std::uint8_t> x);
bool evaluate_at_weight(const Sanfv& f, int weight);

// Majority on odd n: value 1 iff weight > n/2.
Sanfv majority(int n);
// Threshold function: value 1 iff weight >= k.
Sanfv threshold(int n, int k);

}  // namespace symbool
