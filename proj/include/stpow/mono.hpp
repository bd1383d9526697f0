#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "stpow/error.hpp"

namespace stpow {

// Exponent vector packed one byte per variable, variable 0 in the top byte, so
// comparing the packed words is lexicographic comparison of exponent vectors.
class Mono {
public:
    static constexpr int kMaxVars = 8;
    static constexpr int kMaxExp = 255;

    constexpr Mono() = default;
    static constexpr Mono from_bits(std::uint64_t b) {
        Mono m;
        m.bits_ = b;
        return m;
    }
    static Mono var(int i, int e = 1);
    template <class It>
    static Mono from_exponents(It first, It last) {
        Mono m;
        int i = 0;
        for (; first != last; ++first) m = m.with(i++, static_cast<int>(*first));
        return m;
    }

    constexpr int operator[](int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xff); }
    Mono with(int i, int e) const;
    constexpr std::uint64_t bits() const { return bits_; }
    int total() const;
    bool is_one() const { return bits_ == 0; }
    bool divides(Mono other) const;

    friend Mono operator*(Mono a, Mono b);
    friend Mono operator/(Mono a, Mono b);
    friend constexpr bool operator==(Mono a, Mono b) { return a.bits_ == b.bits_; }
    friend constexpr auto operator<=>(Mono a, Mono b) { return a.bits_ <=> b.bits_; }

private:
    static constexpr int shift(int i) { return 8 * (7 - i); }
    std::uint64_t bits_ = 0;
};

struct MonoHash {
    std::size_t operator()(Mono m) const noexcept {
        std::uint64_t x = m.bits() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

}  // namespace stpow
