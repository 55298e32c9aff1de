#include "symbool/bitvector.hpp"

#include "symbool/errors.hpp"

namespace symbool {

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            out.set(i);
        else if (bits[i] != '0')
            throw ParseError("bit string may only contain '0' and '1': '" + std::string(bits) + "'");
    }
    return out;
}

std::size_t BitVector::find_next(std::size_t after) const
{
    std::size_t i = after + 1;
    if (i >= size_) return npos;
    std::size_t k = i / kWordBits;
    Word w = words_[k] & (~Word{0} << (i % kWordBits));
    while (true) {
        if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        if (++k == words_.size()) return npos;
        w = words_[k];
    }
}

BitVector BitVector::operator~() const
{
    BitVector out(*this);
    for (auto& w : out.words_) w = ~w;
    if (size_ % kWordBits != 0 && !out.words_.empty())
        out.words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

}  // namespace symbool
