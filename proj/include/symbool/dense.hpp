#pragma once

// Brute-force reference for small n: truth tables, ANF, annihilators and
// low-degree multiples of arbitrary (not necessarily symmetric) functions.
// Everything here works on full 2^n tables and is meant as ground truth for
// the symmetric fast paths.

#include <cstdint>
#include <string>
#include <vector>

#include "symbool/bitvector.hpp"
#include "symbool/degree.hpp"
#include "symbool/sanfv.hpp"

namespace symbool {

inline constexpr int kMaxDenseVars = 14;

class DenseAnf;

class DenseBooleanFunction {
public:
    explicit DenseBooleanFunction(int n);
    DenseBooleanFunction(int n, BitVector truth_table);

    static DenseBooleanFunction from_sanfv(const Sanfv& f);

    int n() const { return n_; }
    // Input x is an n-bit index, bit i-1 holding x_i.
    bool at(std::uint32_t x) const { return tt_.test(x); }
    const BitVector& truth_table() const { return tt_; }

    bool operator==(const DenseBooleanFunction&) const = default;

private:
    int n_;
    BitVector tt_;
};

class DenseAnf {
public:
    explicit DenseAnf(int n);
    DenseAnf(int n, BitVector coeffs);

    // Monomial with the given variable mask (bit i-1 = x_i).
    static DenseAnf monomial(int n, std::uint32_t mask);

    int n() const { return n_; }
    bool coeff(std::uint32_t mask) const { return coeffs_.test(mask); }
    const BitVector& coeffs() const { return coeffs_; }
    BitVector& coeffs() { return coeffs_; }

    bool is_zero() const { return coeffs_.none(); }
    // True for 0 and 1.
    bool is_constant() const;

    bool operator==(const DenseAnf&) const = default;

private:
    int n_;
    BitVector coeffs_;
};

// In-place subset-sum transform on a packed 2^n table. Self-inverse.
void moebius_in_place(BitVector& table, int n);

DenseAnf moebius(const DenseBooleanFunction& f);
DenseBooleanFunction inverse_moebius(const DenseAnf& a);

Degree dense_degree(const DenseBooleanFunction& f);
Degree anf_degree(const DenseAnf& a);

DenseBooleanFunction dense_mul(const DenseBooleanFunction& f, const DenseBooleanFunction& g);
DenseBooleanFunction dense_add(const DenseBooleanFunction& f, const DenseBooleanFunction& g);
DenseBooleanFunction dense_complement(const DenseBooleanFunction& f);

// Monomial masks of degree <= max_degree in graded order: ascending degree,
// ties broken by ascending mask value.
std::vector<std::uint32_t> graded_monomials(int n, int max_degree);

// "1", "x1", "x2*x5", ... in graded order.
std::string monomial_name(std::uint32_t mask);
std::vector<std::string> monomial_list(const DenseAnf& a);

struct Annihilator {
    int degree = 0;
    DenseAnf g{1};
    bool of_complement = false;  // g annihilates f+1 rather than f
};

// Least d such that some nonzero g with deg(g) <= d vanishes on supp(f).
// Returns d = 0, g = 1 for f = 0; throws DomainError for f = 1, which has
// no annihilator. Scans d upward, rebuilding the point-by-monomial system
// each time.
Annihilator min_annihilator_degree(const DenseBooleanFunction& f);

// min over f and f+1. Ties prefer the annihilator of f.
Annihilator dense_ai(const DenseBooleanFunction& f);

struct Multiplier {
    int d = 0;
    DenseAnf g{1};
    DenseAnf h{1};
    bool vanishing = false;  // h = g f = 0, only possible once e >= AI(f)
};

// Does a nonconstant g with deg(g) <= e and deg(g f) <= d exist?
bool multiplier_feasible(const DenseBooleanFunction& f, int e, int d, Multiplier* witness = nullptr);

// Least d admitting a nonconstant g, deg(g) <= e, deg(g f) <= d, found by
// binary search on d in [0, n-e]. Requires 1 <= e < n.
Multiplier min_multiplier_degree(const DenseBooleanFunction& f, int e);

struct DenseFai {
    int ai = 0;
    int fai = 0;
    DenseAnf g{1};
    DenseAnf h{1};
    bool capped = false;
};

// Fast algebraic immunity computed purely on the truth table.
DenseFai dense_fai(const DenseBooleanFunction& f);

// MAI and FAI >= n.
bool dense_is_aar(const DenseBooleanFunction& f);

}  // namespace symbool
