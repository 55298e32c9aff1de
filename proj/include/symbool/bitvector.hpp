#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symbool {

// Fixed-length vector over F2, packed into 64-bit words. Bits past size()
// in the last word are kept zero.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    // Parses a '0'/'1' string, leftmost character is bit 0.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool value = true)
    {
        const Word mask = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
    void reset()
    {
        for (auto& w : words_) w = 0;
    }

    bool any() const
    {
        for (Word w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Lowest / highest set index, or npos.
    std::size_t find_first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return npos;
    }
    std::size_t find_next(std::size_t after) const;
    std::size_t find_last() const
    {
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k]) return k * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[k])));
        return npos;
    }

    BitVector& operator^=(const BitVector& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }
    BitVector& operator&=(const BitVector& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    BitVector& operator|=(const BitVector& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    // Complement within size().
    BitVector operator~() const;

    bool operator==(const BitVector&) const = default;

    Word* data() { return words_.data(); }
    const Word* data() const { return words_.data(); }

    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace symbool
