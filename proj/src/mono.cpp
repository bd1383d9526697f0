#include "stpow/mono.hpp"

#include <string>

namespace stpow {

namespace {
constexpr std::uint64_t kHigh = 0x8080808080808080ull;
}

Mono Mono::var(int i, int e) { return Mono{}.with(i, e); }

Mono Mono::with(int i, int e) const {
    if (i < 0 || i >= kMaxVars) throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i));
    if (e < 0 || e > kMaxExp) throw Error(ErrorKind::ExponentOverflow, "exponent " + std::to_string(e));
    Mono m = *this;
    m.bits_ = (bits_ & ~(std::uint64_t{0xff} << shift(i))) | (std::uint64_t(e) << shift(i));
    return m;
}

int Mono::total() const {
    int t = 0;
    for (int i = 0; i < kMaxVars; ++i) t += (*this)[i];
    return t;
}

bool Mono::divides(Mono other) const {
    for (int i = 0; i < kMaxVars; ++i)
        if ((*this)[i] > other[i]) return false;
    return true;
}

Mono operator*(Mono a, Mono b) {
    std::uint64_t s = a.bits_ + b.bits_;
    std::uint64_t carry = ((a.bits_ & b.bits_) | ((a.bits_ | b.bits_) & ~s)) & kHigh;
    if (carry) throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 255");
    return Mono::from_bits(s);
}

Mono operator/(Mono a, Mono b) {
    if (!b.divides(a)) throw Error(ErrorKind::IndexOutOfRange, "monomial does not divide");
    return Mono::from_bits(a.bits_ - b.bits_);
}

}  // namespace stpow
