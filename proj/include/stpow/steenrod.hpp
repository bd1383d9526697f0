#pragma once

#include "stpow/symfun.hpp"

namespace stpow {

// (P^1)^k at the prime p; only iterates of P^1 are computed.
struct SteenrodOp {
    int iterate = 1;
    u32 p = 0;
    int degree_shift() const { return 2 * iterate * static_cast<int>(p - 1); }
};

// The derivation t -> t^p on a ring whose variables all have degree 2. Works
// in any linear coordinates, since P^1 x = x^p for every degree-2 class x.
Poly p1_on_t_ring(const Poly& f);

// P^1 p_n in H*(BSpin(2m)) as a polynomial in p_1..p_m (p_m = e_m^2).
Poly p1_wu(int n, int m, u32 p);
// The same class computed by expanding p_n in m t-variables, applying the
// derivation and rewriting in elementary classes.
Poly wu_oracle(int n, int m, u32 p);

// P^1 e_m = e_m * s_{(p-1)/2}(z), in the free ring.
Poly p1_euler(int m, u32 p);

// P^1 on H*(BSpin(2m)) in the free basis, extended from the generators by
// the Cartan formula.
Poly p1_spin(const Poly& f, const SpinRing& ring);
Poly p1_spin(const Poly& f);
SpinElement p1_spin(const SpinElement& x);
// P^1 computed directly on A + B e_m: z_i -> 2 z_i^((p+1)/2), e -> e s_r.
SpinElement p1_zform(const SpinElement& x);

// Applies op to a free-basis Spin-ring polynomial.
Poly apply_op(const SteenrodOp& op, const Poly& f);

}  // namespace stpow
