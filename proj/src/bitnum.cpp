#include "collatz/bitnum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace collatz {

namespace {

using u128 = unsigned __int128;

constexpr std::size_t word_bits = 64;

// Largest power of ten in a 64-bit word; decimal conversion peels 19 digits
// per long division pass.
constexpr std::uint64_t decimal_chunk = 10'000'000'000'000'000'000ULL;
constexpr int decimal_chunk_digits = 19;

}  // namespace

BitNum::BitNum(std::vector<std::uint64_t> words) : words_(std::move(words)) {}

BitNum BitNum::one() {
    return BitNum({1});
}

BitNum BitNum::from_uint(std::uint64_t value) {
    if (value == 0)
        throw std::invalid_argument("from_uint: zero is not representable");
    return BitNum({value});
}

BitNum BitNum::from_decimal(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("from_decimal: empty text");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("from_decimal: character '" +
                                        std::string(1, text[i]) + "' at position " +
                                        std::to_string(i) + " is not a digit");
    }
    if (text[0] == '0') {
        if (text.size() == 1)
            throw std::invalid_argument("from_decimal: zero is not representable");
        throw std::invalid_argument("from_decimal: leading zero");
    }

    std::vector<std::uint64_t> words{0};
    for (const char c : text) {
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (std::uint64_t& w : words) {
            const u128 t = static_cast<u128>(w) * 10 + carry;
            w = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> word_bits);
        }
        if (carry != 0)
            words.push_back(carry);
    }
    return BitNum(std::move(words));
}

BitNum BitNum::from_lsb_text(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("from_lsb_text: empty text");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw std::invalid_argument("from_lsb_text: character '" +
                                        std::string(1, text[i]) + "' at position " +
                                        std::to_string(i) + " is not '0' or '1'");
    }
    if (text.back() != '1')
        throw std::invalid_argument(
            "from_lsb_text: most significant bit (final character) must be '1'");

    std::vector<std::uint64_t> words((text.size() + word_bits - 1) / word_bits, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            words[i / word_bits] |= std::uint64_t{1} << (i % word_bits);
    }
    return BitNum(std::move(words));
}

std::string BitNum::to_decimal() const {
    std::vector<std::uint64_t> tmp = words_;
    std::string out;
    while (!(tmp.size() == 1 && tmp[0] == 0)) {
        std::uint64_t rem = 0;
        for (std::size_t i = tmp.size(); i-- > 0;) {
            const u128 cur = (static_cast<u128>(rem) << word_bits) | tmp[i];
            tmp[i] = static_cast<std::uint64_t>(cur / decimal_chunk);
            rem = static_cast<std::uint64_t>(cur % decimal_chunk);
        }
        while (tmp.size() > 1 && tmp.back() == 0)
            tmp.pop_back();
        std::string chunk = std::to_string(rem);
        const bool more = !(tmp.size() == 1 && tmp[0] == 0);
        if (more)
            chunk.insert(0, decimal_chunk_digits - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

std::string BitNum::to_lsb_text() const {
    std::string out(bit_length(), '0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (bit(i))
            out[i] = '1';
    }
    return out;
}

std::size_t BitNum::bit_length() const {
    return (words_.size() - 1) * word_bits +
           (word_bits - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

bool BitNum::bit(std::size_t index) const {
    const std::size_t word = index / word_bits;
    if (word >= words_.size())
        return false;
    return (words_[word] >> (index % word_bits)) & 1;
}

bool BitNum::is_even() const {
    return (words_[0] & 1) == 0;
}

bool BitNum::is_one() const {
    return words_.size() == 1 && words_[0] == 1;
}

BitNum add(const BitNum& a, const BitNum& b) {
    const std::vector<std::uint64_t>& x = a.words_;
    const std::vector<std::uint64_t>& y = b.words_;
    const std::size_t n = std::max(x.size(), y.size());
    std::vector<std::uint64_t> sum;
    sum.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const u128 t = static_cast<u128>(i < x.size() ? x[i] : 0) +
                       (i < y.size() ? y[i] : 0) + carry;
        sum.push_back(static_cast<std::uint64_t>(t));
        carry = static_cast<std::uint64_t>(t >> word_bits);
    }
    if (carry != 0)
        sum.push_back(carry);
    return BitNum(std::move(sum));
}

BitNum doubled(const BitNum& x) {
    std::vector<std::uint64_t> w = x.words_;
    std::uint64_t carry = 0;
    for (std::uint64_t& word : w) {
        const std::uint64_t next = word >> (word_bits - 1);
        word = (word << 1) | carry;
        carry = next;
    }
    if (carry != 0)
        w.push_back(carry);
    return BitNum(std::move(w));
}

BitNum halve(const BitNum& x) {
    if (!x.is_even())
        throw std::domain_error("halve: operand is odd");
    std::vector<std::uint64_t> w = x.words_;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        w[i] = (w[i] >> 1) | (w[i + 1] << (word_bits - 1));
    w.back() >>= 1;
    if (w.size() > 1 && w.back() == 0)
        w.pop_back();
    return BitNum(std::move(w));
}

BitNum triple_plus_one(const BitNum& x) {
    if (x.is_even())
        throw std::domain_error("triple_plus_one: operand is even");
    return add(add(x, doubled(x)), BitNum::one());
}

std::strong_ordering compare(const BitNum& a, const BitNum& b) {
    if (a.words_.size() != b.words_.size())
        return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i])
            return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace collatz
