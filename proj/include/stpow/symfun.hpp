#pragma once

#include <memory>
#include <vector>

#include "stpow/poly.hpp"

namespace stpow {

// Elementary symmetric functions e_0..e_kmax of the given values.
std::vector<Poly> elementary_of(const std::vector<Poly>& values, int kmax, const MonoFilter& keep = {});

// Symmetric classes of a list of degree-2 values (the roots t_i, possibly with
// repeats or written in other coordinates).
struct SymClassTable {
    Ring ring;
    int count = 0;
    std::vector<Poly> c;  // c[i] = e_i(values), i = 0..count
    std::vector<Poly> q;  // q[i] = e_i(values^2)
    std::vector<Poly> s;  // s[k] = sum values^(2k), k = 0..count
    Poly euler;           // product of the first euler_count values

    static SymClassTable build(const Ring& ring, const std::vector<Poly>& values, int euler_count,
                               const MonoFilter& keep = {});
};

// c1..cn with deg c_i = 2i. The c_i satisfy relations once expanded in fewer
// t-variables, so the ring is marked non-free.
Ring make_c_ring(int n, u32 p);
// c_i^2 - 2c_{i-1}c_{i+1} + 2c_{i-2}c_{i+2} - ..., with c_0 = 1 and c_j = 0 past
// the ring's last variable.
Poly q_from_c(int i, const Ring& c_ring);

// Rewrites a symmetric polynomial in z_1..z_n as a polynomial in e_1..e_n
// (the variables of e_ring) by leading-term subtraction in lex order.
Poly to_elementary_basis(const Poly& f, const Ring& e_ring);
// Expands a polynomial in e_1..e_n back into the z-variables.
Poly from_elementary_basis(const Poly& g, const Ring& z_ring);

// Newton: the power sum s_k of z_1..z_m in the elementary classes p_1..p_m.
Poly power_sum_in_p(int k, const Ring& pont_ring);

// H*(BSpin(2m); Z/p) = Z/p[p_1, ..., p_{m-1}, e_m].
class SpinRing {
public:
    SpinRing(int m, u32 p);

    int m() const { return m_; }
    u32 p() const { return p_; }
    // p1..p_{m-1}, e_m; prints as p7*p6.
    const Ring& free_ring() const { return free_; }
    // z_i = t_i^2.
    const Ring& z_ring() const { return z_; }
    // p1..p_m with p_m standing for e_m^2.
    const Ring& pont_ring() const { return pont_; }
    int euler_index() const { return m_ - 1; }

    // p_m^k becomes e_m^(2k).
    Poly pont_to_free(const Poly& f) const;
    const std::vector<Poly>& z_elementary() const { return zel_; }

private:
    int m_;
    u32 p_;
    Ring free_, z_, pont_;
    std::vector<Poly> zel_;
};

std::shared_ptr<const SpinRing> spin_ring(int m, u32 p);

// A + B e_m with A, B symmetric in the z-variables.
struct SpinElement {
    std::shared_ptr<const SpinRing> ring;
    Poly even;
    Poly odd;
};

SpinElement to_zform(const Poly& f, const std::shared_ptr<const SpinRing>& ring);
Poly from_zform(const SpinElement& x);
SpinElement spin_mul(const SpinElement& a, const SpinElement& b);

}  // namespace stpow
