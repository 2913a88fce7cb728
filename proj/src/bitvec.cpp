#include "ccount/bitvec.hpp"

#include "ccount/errors.hpp"

#include <algorithm>

namespace ccount {

BitVec BitVec::from_uint(int width, std::uint64_t value) {
    if (width < 0 || (width < 64 && (value >> width) != 0))
        throw RangeError("value does not fit in " + std::to_string(width) + " bits");
    std::vector<bool> bits(width);
    for (int i = 0; i < width && i < 64; ++i)
        bits[i] = (value >> i) & 1u;
    return BitVec(std::move(bits));
}

BitVec BitVec::one_hot(int width, int hot) {
    if (hot < 0 || hot >= width)
        throw RangeError("one-hot index out of range");
    std::vector<bool> bits(width, false);
    bits[hot] = true;
    return BitVec(std::move(bits));
}

BitVec BitVec::parse(std::string_view msb_first) {
    std::vector<bool> bits(msb_first.size());
    for (std::size_t i = 0; i < msb_first.size(); ++i) {
        char c = msb_first[msb_first.size() - 1 - i];
        if (c != '0' && c != '1')
            throw RangeError("bit string may contain only 0 and 1");
        bits[i] = (c == '1');
    }
    return BitVec(std::move(bits));
}

std::uint64_t BitVec::to_uint() const {
    if (width() > 64)
        throw RangeError("bit vector too wide for a 64-bit value");
    std::uint64_t v = 0;
    for (int i = 0; i < width(); ++i)
        if (bits_[i])
            v |= std::uint64_t{1} << i;
    return v;
}

BitVec BitVec::concat(const BitVec& tail) const {
    std::vector<bool> bits = bits_;
    bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
    return BitVec(std::move(bits));
}

BitVec BitVec::slice(int from, int len) const {
    if (from < 0 || len < 0 || from + len > width())
        throw RangeError("slice out of range");
    return BitVec(std::vector<bool>(bits_.begin() + from, bits_.begin() + from + len));
}

std::string BitVec::to_display_string() const {
    std::string s(width(), '0');
    for (int i = 0; i < width(); ++i)
        if (bits_[i])
            s[width() - 1 - i] = '1';
    return s;
}

} // namespace ccount
