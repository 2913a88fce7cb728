#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccount {

/// Fixed-width vector of bits. Index 0 is the LEAST significant bit of the
/// unsigned interpretation; display strings put the most significant bit on
/// the left and are converted at the text boundary only.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::vector<bool> bits) : bits_(std::move(bits)) {}

    static BitVec zeros(int width) { return BitVec(std::vector<bool>(width, false)); }
    static BitVec ones(int width) { return BitVec(std::vector<bool>(width, true)); }
    static BitVec from_uint(int width, std::uint64_t value);
    /// One-hot vector of the given width with bit `hot` set.
    static BitVec one_hot(int width, int hot);
    /// Parses an MSB-first digit string such as "011" (= 3).
    static BitVec parse(std::string_view msb_first);

    int width() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_.at(i); }
    void set(int i, bool v) { bits_.at(i) = v; }

    /// Unsigned value; width must be <= 64.
    std::uint64_t to_uint() const;

    /// this first (low indices), then tail.
    BitVec concat(const BitVec& tail) const;
    BitVec slice(int from, int len) const;

    /// MSB-first digit string, e.g. (1,1,0) -> "011".
    std::string to_display_string() const;

    bool operator==(const BitVec& other) const { return bits_ == other.bits_; }
    bool operator!=(const BitVec& other) const { return bits_ != other.bits_; }

private:
    std::vector<bool> bits_;
};

} // namespace ccount
