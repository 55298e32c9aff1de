#pragma once

#include <cstddef>
#include <vector>

#include "symbool/bitvector.hpp"

namespace symbool {

// Incremental row echelon basis over F2. Every inserted vector gets a
// sequential id; each basis vector carries a tag recording which inserted
// vectors it is the sum of. Inserting a vector that reduces to zero yields a
// linear dependency (its tag), which is how kernels are read off.
class EchelonBasis {
public:
    enum class Pivot { Lowest, Highest };

    struct Insertion {
        bool independent = false;
        std::size_t pivot = BitVector::npos;  // leading position, if independent
        BitVector tag;                        // combination of inserted ids
    };

    EchelonBasis(std::size_t length, std::size_t max_vectors, Pivot pivot);

    Insertion insert(BitVector v);

    std::size_t rank() const { return vectors_.size(); }
    std::size_t inserted() const { return inserted_; }
    std::size_t length() const { return length_; }

    const BitVector& vector(std::size_t slot) const { return vectors_[slot]; }
    const BitVector& tag(std::size_t slot) const { return tags_[slot]; }
    std::size_t pivot_of(std::size_t slot) const { return pivots_[slot]; }

private:
    std::size_t lead(const BitVector& v) const { return pivot_ == Pivot::Lowest ? v.find_first() : v.find_last(); }

    std::size_t length_;
    std::size_t max_vectors_;
    Pivot pivot_;
    std::size_t inserted_ = 0;
    std::vector<BitVector> vectors_;
    std::vector<BitVector> tags_;
    std::vector<std::size_t> pivots_;
    std::vector<int> slot_of_pivot_;
};

}  // namespace symbool
