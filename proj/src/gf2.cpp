#include "symbool/gf2.hpp"

#include "symbool/errors.hpp"

namespace symbool {

EchelonBasis::EchelonBasis(std::size_t length, std::size_t max_vectors, Pivot pivot)
    : length_(length), max_vectors_(max_vectors), pivot_(pivot), slot_of_pivot_(length, -1)
{
}

EchelonBasis::Insertion EchelonBasis::insert(BitVector v)
{
    if (v.size() != length_) throw DimensionError("vector length does not match the basis");
    if (inserted_ >= max_vectors_) throw RangeError("echelon basis is full");

    Insertion result;
    result.tag = BitVector(max_vectors_);
    result.tag.set(inserted_++);

    for (std::size_t p = lead(v); p != BitVector::npos; p = lead(v)) {
        const int slot = slot_of_pivot_[p];
        if (slot < 0) {
            result.independent = true;
            result.pivot = p;
            slot_of_pivot_[p] = static_cast<int>(vectors_.size());
            vectors_.push_back(std::move(v));
            tags_.push_back(result.tag);
            pivots_.push_back(p);
            return result;
        }
        v ^= vectors_[static_cast<std::size_t>(slot)];
        result.tag ^= tags_[static_cast<std::size_t>(slot)];
    }
    return result;
}

}  // namespace symbool
