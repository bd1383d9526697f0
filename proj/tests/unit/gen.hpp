#pragma once
// Seeded random generators for the property tests.

#include <random>

#include "stpow/poly.hpp"
#include "stpow/ring.hpp"

namespace stpow::testgen {

inline constexpr int kCases = 200;

using Rng = std::mt19937_64;

inline u32 coeff(Rng& rng, u32 p, bool nonzero = false) {
    std::uniform_int_distribution<u32> d(nonzero ? 1 : 0, p - 1);
    return d(rng);
}

// A homogeneous polynomial of the given degree with up to `terms` terms.
inline Poly homogeneous(Rng& rng, const Ring& ring, int degree, int terms) {
    auto monos = monomials_of_degree(*ring, degree);
    PolyBuilder b(ring);
    if (monos.empty()) return std::move(b).build();
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (int i = 0; i < terms; ++i) b.add(monos[pick(rng)], coeff(rng, ring->p, true));
    return std::move(b).build();
}

// Sum of homogeneous pieces in degrees up to max_degree.
inline Poly mixed(Rng& rng, const Ring& ring, int max_degree, int terms) {
    Poly f(ring);
    std::uniform_int_distribution<int> deg(0, max_degree / 2);
    for (int i = 0; i < 3; ++i) f += homogeneous(rng, ring, 2 * deg(rng), terms);
    return f;
}

}  // namespace stpow::testgen

#include <optional>

#include "stpow/error.hpp"

namespace stpow::testgen {

// The kind of the stpow::Error thrown by f, if any.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace stpow::testgen
