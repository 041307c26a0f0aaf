#pragma once

// Test-only reference implementations, written with deliberately different
// machinery than the library under test: native 128-bit trajectory runs for
// small inputs, and schoolbook decimal-string arithmetic (most significant
// digit first) for values far beyond machine width.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

namespace oracle {

using u128 = unsigned __int128;

struct Stats {
    std::size_t start_bit_length = 0;
    std::uint64_t halvings = 0;
    std::uint64_t odd_steps = 0;
    std::uint64_t stopping_time = 0;
    std::size_t max_bit_length = 0;
};

inline std::size_t bits_of(u128 v) {
    std::size_t n = 0;
    while (v != 0) {
        ++n;
        v >>= 1;
    }
    return n;
}

// Safe for starts whose trajectory stays under 2^127; plenty for x <= 10^6.
inline Stats run(u128 x) {
    Stats s;
    s.start_bit_length = bits_of(x);
    s.max_bit_length = s.start_bit_length;
    while (x != 1) {
        if (x % 2 == 0) {
            x /= 2;
            ++s.halvings;
        } else {
            x = 3 * x + 1;
            ++s.odd_steps;
        }
        s.max_bit_length = std::max(s.max_bit_length, bits_of(x));
    }
    s.stopping_time = s.halvings + s.odd_steps;
    return s;
}

// ---- decimal strings, most significant digit first, no leading zeros ----

inline std::string dec_add(const std::string& a, const std::string& b) {
    std::string out;
    int carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        int digit = carry;
        if (i < a.size())
            digit += a[a.size() - 1 - i] - '0';
        if (i < b.size())
            digit += b[b.size() - 1 - i] - '0';
        carry = digit / 10;
        out.push_back(static_cast<char>('0' + digit % 10));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::string dec_double(const std::string& a) {
    return dec_add(a, a);
}

// Single-pass digit*3 with carry, then +1: a different route to 3x+1 than
// the library's x + 2x + 1 binary composition.
inline std::string dec_triple_plus_one(const std::string& a) {
    std::string out;
    int carry = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        const int digit = (a[i] - '0') * 3 + carry;
        carry = digit / 10;
        out.push_back(static_cast<char>('0' + digit % 10));
    }
    while (carry) {
        out.push_back(static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
    std::reverse(out.begin(), out.end());
    return dec_add(out, "1");
}

inline std::string dec_halve(const std::string& a) {
    std::string out;
    int rem = 0;
    for (const char c : a) {
        const int cur = rem * 10 + (c - '0');
        out.push_back(static_cast<char>('0' + cur / 2));
        rem = cur % 2;
    }
    const std::size_t first = out.find_first_not_of('0');
    return first == std::string::npos ? "0" : out.substr(first);
}

inline bool dec_is_even(const std::string& a) {
    return ((a.back() - '0') % 2) == 0;
}

inline int dec_compare(const std::string& a, const std::string& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    if (a == b)
        return 0;
    return a < b ? -1 : 1;
}

// Uniform random decimal literal with exactly n_digits digits, no leading
// zero. Deterministic for a given generator state.
inline std::string random_decimal(std::mt19937_64& rng, std::size_t n_digits) {
    std::uniform_int_distribution<int> lead(1, 9);
    std::uniform_int_distribution<int> any(0, 9);
    std::string out;
    out.reserve(n_digits);
    out.push_back(static_cast<char>('0' + lead(rng)));
    for (std::size_t i = 1; i < n_digits; ++i)
        out.push_back(static_cast<char>('0' + any(rng)));
    return out;
}

}  // namespace oracle
