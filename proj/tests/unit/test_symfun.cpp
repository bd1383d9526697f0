#include <gtest/gtest.h>

#include "gen.hpp"
#include "stpow/idealred.hpp"
#include "stpow/symfun.hpp"

using namespace stpow;
using testgen::error_kind;

namespace {

u64 binomial(int n, int k) {
    u64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Swaps two variables.
LinearSubstitution transposition(const Ring& r, int a, int b) {
    LinearSubstitution s = LinearSubstitution::identity(r);
    s.images[a] = Poly::var(r, b);
    s.images[b] = Poly::var(r, a);
    return s;
}

}  // namespace

TEST(QFromC, SmallIndices) {
    Ring c = make_c_ring(8, 7);
    EXPECT_EQ(q_from_c(1, c), parse_poly("c1^2 - 2*c2", c));
    EXPECT_EQ(q_from_c(2, c), parse_poly("c2^2 - 2*c1*c3 + 2*c4", c));
    EXPECT_EQ(q_from_c(8, c), parse_poly("c8^2", c));
    EXPECT_EQ(error_kind([&] { q_from_c(9, c); }), ErrorKind::IndexOutOfRange);
}

TEST(QFromC, ExpandedOnTheTorus) {
    for (u32 p : {5u, 7u}) {
        const E7Frame& fr = e7_frame(p);
        Ring c = make_c_ring(8, p);
        LinearSubstitution s{c, fr.t, {}, false};
        for (int j = 1; j <= 8; ++j) s.images.emplace_back(fr.t_classes.c[j]);
        for (int i = 1; i <= 8; ++i) EXPECT_EQ(apply_substitution(q_from_c(i, c), s), fr.t_classes.q[i]) << i;
    }
}

TEST(SymClassTable, ShapeAndSymmetry) {
    Ring r = make_uniform_ring("t5", "t", 5, 2, 7);
    std::vector<Poly> vals;
    for (int i = 0; i < 5; ++i) vals.push_back(Poly::var(r, i));
    auto tab = SymClassTable::build(r, vals, 5);
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(tab.c[i].size(), binomial(5, i));
    EXPECT_EQ(tab.euler, Poly::monomial(r, Mono::from_bits(0x0101010101000000ull)));
    for (int a = 0; a < 4; ++a) {
        auto s = transposition(r, a, a + 1);
        for (int i = 1; i <= 5; ++i) {
            EXPECT_EQ(apply_substitution(tab.q[i], s), tab.q[i]);
            EXPECT_EQ(apply_substitution(tab.s[i], s), tab.s[i]);
        }
    }
}

TEST(SymClassTable, TorusClassesModT7) {
    for (u32 p : {5u, 7u}) {
        const E7Frame& fr = e7_frame(p);
        auto syms = fr.t_symbols();
        IdealSpec t7 = parse_ideal("(t7)", fr.t);
        for (int i = 1; i <= 6; ++i)
            EXPECT_EQ(reduce(fr.t_classes.q[i], t7), reduce(syms.at("p" + std::to_string(i)), t7)) << i;
        EXPECT_EQ(reduce(fr.t_classes.c[6], t7), syms.at("e6"));
    }
}

TEST(ElementaryBasis, Newton) {
    auto sr = spin_ring(4, 7);
    const Ring& z = sr->z_ring();
    const Ring& e = sr->pont_ring();
    EXPECT_EQ(to_elementary_basis(parse_poly("z1^2+z2^2+z3^2+z4^2", z), e), parse_poly("p1^2 - 2*p2", e));
    EXPECT_EQ(to_elementary_basis(parse_poly("z1^3+z2^3+z3^3+z4^3", z), e),
              parse_poly("p1^3 - 3*p1*p2 + 3*p3", e));
    EXPECT_EQ(error_kind([&] { to_elementary_basis(parse_poly("z1", z), e); }), ErrorKind::NotSymmetric);
}

TEST(PowerSums, Newton) {
    auto sr = spin_ring(4, 7);
    const Ring& e = sr->pont_ring();
    EXPECT_EQ(power_sum_in_p(2, e), parse_poly("p1^2 - 2*p2", e));
    EXPECT_EQ(power_sum_in_p(3, e), parse_poly("p1^3 - 3*p1*p2 + 3*p3", e));
    for (int k = 1; k <= 6; ++k) {
        Poly direct(sr->z_ring());
        for (int i = 0; i < 4; ++i) direct += Poly::monomial(sr->z_ring(), Mono::var(i, k));
        EXPECT_EQ(from_elementary_basis(power_sum_in_p(k, e), sr->z_ring()), direct) << k;
    }
}

TEST(SpinElement, EulerSquared) {
    auto sr = spin_ring(6, 5);
    const Ring& f = sr->free_ring();
    auto e = to_zform(parse_poly("e6", f), sr);
    auto sq = spin_mul(e, e);
    EXPECT_TRUE(sq.odd.is_zero());
    EXPECT_EQ(sq.even, Poly::monomial(sr->z_ring(), Mono::from_bits(0x0101010101010000ull)));
    EXPECT_EQ(from_zform(sq), parse_poly("e6^2", f));
}

TEST(SpinElement, EvenTimesEven) {
    auto sr = spin_ring(6, 5);
    const Ring& f = sr->free_ring();
    Poly a = parse_poly("p2 + p1^2", f), b = parse_poly("p3*p1", f);
    auto prod = spin_mul(to_zform(a, sr), to_zform(b, sr));
    EXPECT_TRUE(prod.odd.is_zero());
    EXPECT_EQ(from_zform(prod), a * b);
}

TEST(BasisConversion, SpinRoundTripRandom) {
    testgen::Rng rng(1206);
    auto sr = spin_ring(6, 5);
    for (int n = 0; n < testgen::kCases; ++n) {
        Poly f = testgen::homogeneous(rng, sr->free_ring(), 4 * (1 + static_cast<int>(rng() % 7)), 4);
        EXPECT_EQ(from_zform(to_zform(f, sr)), f) << to_string(f);
    }
}
