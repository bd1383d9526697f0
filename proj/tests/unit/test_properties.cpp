// Randomized algebraic properties, kCases seeded cases each.
#include <gtest/gtest.h>

#include "gen.hpp"
#include "stpow/idealred.hpp"
#include "stpow/steenrod.hpp"
#include "stpow/symfun.hpp"
#include "stpow/weyl.hpp"

using namespace stpow;
using namespace stpow::testgen;

namespace {

u32 prime_of(Rng& rng) { return rng() % 2 ? 5 : 7; }

int even_degree(Rng& rng, int max) { return 2 * static_cast<int>(rng() % (max / 2 + 1)); }

}  // namespace

TEST(Property, RingAxioms) {
    Rng rng(1);
    for (int n = 0; n < kCases; ++n) {
        const Ring& r = e7_frame(prime_of(rng)).t;
        Poly a = mixed(rng, r, 8, 4), b = mixed(rng, r, 8, 4), c = mixed(rng, r, 8, 4);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a.scaled(r->p - 1), -a);
        EXPECT_EQ(a.pow(3), a * a * a);
    }
}

TEST(Property, TorusP1IsDerivation) {
    Rng rng(2);
    for (int n = 0; n < kCases; ++n) {
        const Ring& r = e7_frame(prime_of(rng)).t;
        Poly a = homogeneous(rng, r, even_degree(rng, 8), 3), b = homogeneous(rng, r, even_degree(rng, 8), 3);
        EXPECT_EQ(p1_on_t_ring(a * b), p1_on_t_ring(a) * b + a * p1_on_t_ring(b));
        EXPECT_EQ(p1_on_t_ring(a + b), p1_on_t_ring(a) + p1_on_t_ring(b));
    }
}

TEST(Property, GenericDerivationLeibniz) {
    Rng rng(3);
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        Ring r = make_uniform_ring("t", "t", 4, 2, p);
        std::vector<Poly> img;
        for (int i = 0; i < 4; ++i) img.push_back(homogeneous(rng, r, 2 * static_cast<int>(p), 2));
        Poly a = homogeneous(rng, r, even_degree(rng, 8), 3), b = homogeneous(rng, r, even_degree(rng, 8), 3);
        EXPECT_EQ(apply_derivation(a * b, img), apply_derivation(a, img) * b + a * apply_derivation(b, img));
    }
}

TEST(Property, SpinP1IsDerivation) {
    Rng rng(4);
    for (int n = 0; n < kCases; ++n) {
        auto sr = spin_ring(4, prime_of(rng));
        const Ring& r = sr->free_ring();
        Poly a = homogeneous(rng, r, 4 * static_cast<int>(1 + rng() % 3), 2);
        Poly b = homogeneous(rng, r, 4 * static_cast<int>(1 + rng() % 3), 2);
        EXPECT_EQ(p1_spin(a * b, *sr), p1_spin(a, *sr) * b + a * p1_spin(b, *sr));
    }
}

TEST(Property, P1Homogeneity) {
    Rng rng(5);
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        const int shift = 2 * static_cast<int>(p - 1);
        auto sr = spin_ring(4, p);
        Poly f = homogeneous(rng, sr->free_ring(), 4 * static_cast<int>(1 + rng() % 4), 3);
        Poly g = p1_spin(f, *sr);
        if (!g.is_zero()) {
            EXPECT_TRUE(g.is_homogeneous());
            EXPECT_EQ(g.degree(), f.degree() + shift);
        }
        Poly t = homogeneous(rng, e7_frame(p).t, even_degree(rng, 10) + 2, 3);
        Poly pt = p1_on_t_ring(t);
        if (!pt.is_zero()) {
            EXPECT_TRUE(pt.is_homogeneous());
            EXPECT_EQ(pt.degree(), t.degree() + shift);
        }
    }
}

TEST(Property, ReflectionsAreInvolutions) {
    Rng rng(6);
    RootSystem rs = RootSystem::e7();
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        const auto& alpha = rs.simple[rng() % rs.simple.size()];
        auto s = reflection_from_root(rs, alpha, p);
        Poly f = mixed(rng, e7_frame(p).t, 8, 4);
        Poly sf = apply_substitution(f, s);
        EXPECT_EQ(apply_substitution(sf, s), f);
        if (f.is_homogeneous() && !sf.is_zero()) EXPECT_EQ(sf.degree(), f.degree());
    }
}

TEST(Property, SubstitutionIsHomomorphism) {
    Rng rng(7);
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        const auto& phi = phi1_t(p);
        const Ring& r = e7_frame(p).t;
        Poly a = mixed(rng, r, 6, 3), b = mixed(rng, r, 6, 3);
        EXPECT_EQ(apply_substitution(a * b, phi), apply_substitution(a, phi) * apply_substitution(b, phi));
        EXPECT_EQ(apply_substitution(a + b, phi), apply_substitution(a, phi) + apply_substitution(b, phi));
        EXPECT_EQ(apply_substitution(Poly::constant(r, 3), phi), Poly::constant(r, 3));
    }
}

TEST(Property, ReduceIdempotentAndMultiplicative) {
    Rng rng(8);
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        const E7Frame& fr = e7_frame(p);
        const char* text = n % 2 ? "(t7)" : "(t1,t7+t2)";
        IdealSpec ideal = parse_ideal(text, fr.t);
        Poly a = mixed(rng, fr.t, 8, 4), b = mixed(rng, fr.t, 8, 4);
        Poly ra = reduce(a, ideal), rb = reduce(b, ideal);
        EXPECT_EQ(reduce(ra, ideal), ra);
        EXPECT_EQ(reduce(a * b, ideal), reduce(ra * rb, ideal));
        EXPECT_EQ(reduce(a + b, ideal), ra + rb);
        EXPECT_TRUE(reduce(a - ra, ideal).is_zero());
    }
}

// Elements built as sums h_i g_i over the generators of (c1,t7)^2 + (q1^k)
// are members under both routes; on arbitrary input the routes agree.
TEST(Property, MembershipSoundAndRoutesAgree) {
    Rng rng(9);
    for (int n = 0; n < kCases; ++n) {
        u32 p = prime_of(rng);
        const E7Frame& fr = e7_frame(p);
        int k = 1 + static_cast<int>(rng() % 2);
        IdealSpec ideal = parse_ideal(k == 1 ? "(c1,t7)^2+(q1)" : "(c1,t7)^2+(q1^2)", fr.u);
        const int d = 4 * k + even_degree(rng, 4);
        Poly u1 = Poly::var(fr.u, 0), u7 = Poly::var(fr.u, 6);
        Poly q = fr.u_classes.q[1].pow(static_cast<unsigned>(k), fr.trunc);
        Poly member = fr.to_u(homogeneous(rng, fr.u, d - 4 * k, 3) * q);
        if (d >= 4) {
            member += homogeneous(rng, fr.u, d - 4, 2) * u1 * u1;
            member += homogeneous(rng, fr.u, d - 4, 2) * u1 * u7;
        }
        EXPECT_TRUE(member_graded(member, ideal)) << to_string(member);
        EXPECT_TRUE(member_division(member, k, p)) << to_string(member);

        Poly any = fr.to_u(homogeneous(rng, fr.u, d, 4));
        EXPECT_EQ(member_graded(any, ideal), member_division(any, k, p)) << to_string(any);
        EXPECT_EQ(member_graded(any + member, ideal), member_graded(any, ideal));
    }
}

TEST(Property, ElementaryBasisRoundTrips) {
    Rng rng(10);
    for (int n = 0; n < kCases; ++n) {
        auto sr = spin_ring(4, prime_of(rng));
        Poly g = mixed(rng, sr->pont_ring(), 12, 3);
        Poly sym = from_elementary_basis(g, sr->z_ring());
        EXPECT_EQ(to_elementary_basis(sym, sr->pont_ring()), g);
        EXPECT_EQ(from_elementary_basis(to_elementary_basis(sym, sr->pont_ring()), sr->z_ring()), sym);
    }
}

TEST(Property, SpinElementProducts) {
    Rng rng(11);
    for (int n = 0; n < kCases; ++n) {
        auto sr = spin_ring(4, prime_of(rng));
        const Ring& r = sr->free_ring();
        Poly a = mixed(rng, r, 12, 3), b = mixed(rng, r, 12, 3), c = mixed(rng, r, 8, 2);
        auto za = to_zform(a, sr), zb = to_zform(b, sr), zc = to_zform(c, sr);
        EXPECT_EQ(from_zform(spin_mul(za, zb)), a * b);
        EXPECT_EQ(from_zform(spin_mul(za, zb)), from_zform(spin_mul(zb, za)));
        EXPECT_EQ(from_zform(spin_mul(spin_mul(za, zb), zc)), from_zform(spin_mul(za, spin_mul(zb, zc))));
        EXPECT_EQ(from_zform(to_zform(a, sr)), a);
    }
}
