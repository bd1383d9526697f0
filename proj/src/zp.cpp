#include "stpow/zp.hpp"

namespace stpow {

const char* to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::SubstitutionIncomplete: return "SubstitutionIncomplete";
        case ErrorKind::DerivationDegreeError: return "DerivationDegreeError";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::BasisError: return "BasisError";
        case ErrorKind::NonTriangular: return "NonTriangular";
        case ErrorKind::IdealMismatch: return "IdealMismatch";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::UnknownCheck: return "UnknownCheck";
        case ErrorKind::FactBaseError: return "FactBaseError";
    }
    return "Error";
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u32 pow_mod(u32 a, u64 e, u32 p) noexcept {
    u64 r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    // extended Euclid; p need not be small
    i64 t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(ErrorKind::NotPrime, "no inverse mod " + std::to_string(p));
    return residue(t, p);
}

u32 residue(i64 v, u32 p) noexcept {
    i64 r = v % static_cast<i64>(p);
    return static_cast<u32>(r < 0 ? r + p : r);
}

i64 signed_residue(u32 v, u32 p) noexcept {
    return v > p / 2 ? static_cast<i64>(v) - p : static_cast<i64>(v);
}

Coeff::Coeff(i64 v, u32 p) : v_(0), p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
    v_ = residue(v, p);
}

Coeff Coeff::inverse() const { return raw(inv_mod(v_, p_), p_); }

static void same_modulus(Coeff a, Coeff b) {
    if (a.modulus() != b.modulus())
        throw Error(ErrorKind::RingMismatch, "coefficients mod " + std::to_string(a.modulus()) +
                                                 " and " + std::to_string(b.modulus()));
}

Coeff operator+(Coeff a, Coeff b) {
    same_modulus(a, b);
    return Coeff::raw(add_mod(a.v_, b.v_, a.p_), a.p_);
}
Coeff operator-(Coeff a, Coeff b) {
    same_modulus(a, b);
    return Coeff::raw(sub_mod(a.v_, b.v_, a.p_), a.p_);
}
Coeff operator*(Coeff a, Coeff b) {
    same_modulus(a, b);
    return Coeff::raw(mul_mod(a.v_, b.v_, a.p_), a.p_);
}
Coeff operator/(Coeff a, Coeff b) {
    same_modulus(a, b);
    return a * b.inverse();
}

std::string Coeff::to_string(bool signed_form) const {
    return signed_form ? std::to_string(signed_value()) : std::to_string(v_);
}

Coeff coeff_from_rational(i64 numerator, i64 denominator, u32 p) {
    if (p < 2 || !is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (residue(denominator, p) == 0)
        throw Error(ErrorKind::DenominatorVanishes,
                    std::to_string(numerator) + "/" + std::to_string(denominator) + " mod " + std::to_string(p));
    return Coeff::raw(mul_mod(residue(numerator, p), inv_mod(residue(denominator, p), p), p), p);
}

}  // namespace stpow
