#pragma once

#include <cstdint>
#include <string>

#include "stpow/error.hpp"

namespace stpow {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n) noexcept;

// Residue arithmetic. All moduli stay below 2^31 so a sum of two residues fits.
inline u32 add_mod(u32 a, u32 b, u32 p) noexcept {
    u32 s = a + b;
    return s >= p ? s - p : s;
}
inline u32 sub_mod(u32 a, u32 b, u32 p) noexcept { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) noexcept { return a == 0 ? 0 : p - a; }
inline u32 mul_mod(u32 a, u32 b, u32 p) noexcept { return static_cast<u32>(u64{a} * b % p); }
u32 pow_mod(u32 a, u64 e, u32 p) noexcept;
u32 inv_mod(u32 a, u32 p);
u32 residue(i64 v, u32 p) noexcept;
// -2 rather than 5 mod 7: the representative in (-p/2, p/2].
i64 signed_residue(u32 v, u32 p) noexcept;

class Coeff {
public:
    Coeff(i64 v, u32 p);
    static Coeff raw(u32 v, u32 p) noexcept { return Coeff(v, p, 0); }

    u32 value() const noexcept { return v_; }
    u32 modulus() const noexcept { return p_; }
    i64 signed_value() const noexcept { return signed_residue(v_, p_); }
    bool is_zero() const noexcept { return v_ == 0; }

    Coeff inverse() const;
    Coeff operator-() const noexcept { return raw(neg_mod(v_, p_), p_); }
    friend Coeff operator+(Coeff a, Coeff b);
    friend Coeff operator-(Coeff a, Coeff b);
    friend Coeff operator*(Coeff a, Coeff b);
    friend Coeff operator/(Coeff a, Coeff b);
    friend bool operator==(Coeff a, Coeff b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }

    std::string to_string(bool signed_form = false) const;

private:
    Coeff(u32 v, u32 p, int) noexcept : v_(v), p_(p) {}
    u32 v_;
    u32 p_;
};

Coeff coeff_from_rational(i64 numerator, i64 denominator, u32 p);

}  // namespace stpow
