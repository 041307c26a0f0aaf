#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

// Arbitrary-precision unsigned integer, always >= 1, viewed least significant
// bit first. Bits are packed into 64-bit little-endian words; the top word is
// kept nonzero so equal values always have equal representations. Values are
// immutable: every operation returns a fresh number.
class BitNum {
public:
    static BitNum one();
    static BitNum from_uint(std::uint64_t value);

    // Parses a base-10 literal: digits only, no sign, no leading zero, not "0".
    static BitNum from_decimal(std::string_view text);

    // Parses a bit string written least significant bit first, e.g. "1011"
    // is 13. The final character is the most significant bit and must be '1'.
    static BitNum from_lsb_text(std::string_view text);

    std::string to_decimal() const;
    std::string to_lsb_text() const;

    std::size_t bit_length() const;
    bool bit(std::size_t index) const;  // false beyond bit_length()
    bool is_even() const;
    bool is_one() const;

    friend bool operator==(const BitNum&, const BitNum&) = default;

private:
    explicit BitNum(std::vector<std::uint64_t> words);

    std::vector<std::uint64_t> words_;

    friend BitNum add(const BitNum&, const BitNum&);
    friend BitNum doubled(const BitNum&);
    friend BitNum halve(const BitNum&);
    friend std::strong_ordering compare(const BitNum&, const BitNum&);
};

BitNum add(const BitNum& a, const BitNum& b);
BitNum doubled(const BitNum& x);

// x must be even (bit 0 clear); drops the lowest bit.
BitNum halve(const BitNum& x);

// x must be odd; computed as x + 2x + 1 so the cost is two additions.
BitNum triple_plus_one(const BitNum& x);

std::strong_ordering compare(const BitNum& a, const BitNum& b);

inline std::strong_ordering operator<=>(const BitNum& a, const BitNum& b) {
    return compare(a, b);
}

}  // namespace collatz
