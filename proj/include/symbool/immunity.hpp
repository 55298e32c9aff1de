#pragma once

// Exact algebraic and fast algebraic immunity of symmetric functions.
//
//   AI(f)  = min deg(g) over nonzero g with g f = 0 or g (f+1) = 0
//   FAI(f) = min(2 AI(f), min over g with 1 <= deg(g) < AI(f) of deg(g) + deg(g f))
//
// g ranges over all Boolean functions, not only symmetric ones. For
// AI(f) <= 1 the inner range is empty and FAI(f) = 2 AI(f).

#include "symbool/dense.hpp"
#include "symbool/sanfv.hpp"

namespace symbool {

struct AiResult {
    int ai = 0;
    DenseAnf witness{1};
    bool of_complement = false;  // witness annihilates f+1
};

struct FaiResult {
    int ai = 0;
    int fai = 0;
    DenseAnf g{1};
    DenseAnf h{1};  // g f
    bool capped = false;  // fai == 2 ai
};

struct ImmunityProfile {
    Sanfv f{1};
    Degree deg;
    int ai = 0;
    DenseAnf ai_witness{1};
    bool ai_witness_of_complement = false;
    int fai = 0;
    DenseAnf fai_g{1};
    DenseAnf fai_h{1};
    bool capped = false;
};

// Constraint rows are enumerated weight class by weight class over supp(f)
// and supp(f+1); monomial columns are added one degree at a time until one
// side becomes dependent.
AiResult ai_symmetric(const Sanfv& f);

// Single pass over the multiplier monomials in graded order, keeping the
// products g f in echelon form keyed on their leading (highest-degree)
// monomial. The least leading degree among nonconstant g is the minimal
// deg(g f) for every deg(g) bound at once.
FaiResult fai(const Sanfv& f);

// Least d with a nonconstant g, deg(g) <= e, deg(g f) <= d. Requires 1 <= e < AI(f).
int min_d_for_e(const Sanfv& f, int e);

// Algebraic-attack resistant: MAI and FAI >= n.
bool is_aar(const Sanfv& f);

ImmunityProfile profile(const Sanfv& f);

}  // namespace symbool
