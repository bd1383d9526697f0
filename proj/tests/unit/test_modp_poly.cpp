#include <gtest/gtest.h>

#include "gen.hpp"
#include "stpow/parse.hpp"
#include "stpow/poly.hpp"
#include "stpow/zp.hpp"

using namespace stpow;
using testgen::error_kind;

namespace {

Ring t_ring(u32 p, int n = 3) { return make_uniform_ring("t" + std::to_string(n), "t", n, 2, p); }

}  // namespace

TEST(Coeff, FromRational) {
    EXPECT_EQ(coeff_from_rational(1, 12, 7).value(), 3u);
    EXPECT_EQ(coeff_from_rational(18, 5, 7).value(), 5u);
    EXPECT_EQ(coeff_from_rational(-1, 4, 5).value(), 1u);
    EXPECT_EQ(error_kind([] { coeff_from_rational(1, 35, 5); }), ErrorKind::DenominatorVanishes);
}

TEST(Coeff, DenominatorErrorNamesLiteral) {
    try {
        coeff_from_rational(1, 35, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("35"), std::string::npos);
    }
}

TEST(Coeff, InversesExhaustive) {
    for (u32 p : {5u, 7u, 11u, 13u})
        for (u32 a = 1; a < p; ++a) EXPECT_EQ((Coeff(a, p) * Coeff(a, p).inverse()).value(), 1u) << a << " mod " << p;
    EXPECT_EQ(error_kind([] { Coeff(0, 7).inverse(); }), ErrorKind::DivisionByZero);
}

TEST(Coeff, SignedRendering) {
    EXPECT_EQ(signed_residue(5, 7), -2);
    EXPECT_EQ(signed_residue(3, 7), 3);
    EXPECT_EQ(signed_residue(4, 7), -3);
    EXPECT_EQ(signed_residue(2, 5), 2);
    EXPECT_EQ(signed_residue(3, 5), -2);
    EXPECT_EQ(Coeff(-2400, 7).value(), 1u);
}

TEST(Coeff, RejectsCompositeModulus) { EXPECT_EQ(error_kind([] { Coeff(1, 9); }), ErrorKind::NotPrime); }

TEST(Poly, Identities) {
    Ring r = t_ring(7);
    Poly f = parse_poly("3*t1^2 + t1*t2 - t3^2", r);
    EXPECT_EQ(f + Poly(r), f);
    EXPECT_EQ(f * Poly::constant(r, 1), f);
    EXPECT_TRUE((f * Poly(r)).is_zero());
}

TEST(Poly, DifferenceOfSquares) {
    Ring r = t_ring(7);
    EXPECT_EQ(parse_poly("(t1+t2)*(t1-t2)", r), parse_poly("t1^2 - t2^2", r));
}

TEST(Poly, RingMismatch) {
    Poly a = Poly::var(t_ring(7), 0), b = Poly::var(t_ring(5), 0);
    EXPECT_EQ(error_kind([&] { (void)(a + b); }), ErrorKind::RingMismatch);
    EXPECT_EQ(error_kind([&] { (void)(a * b); }), ErrorKind::RingMismatch);
}

TEST(Poly, CoefficientOf) {
    Ring r = t_ring(7);
    Poly f = parse_poly("3*t1 + 2*t2", r);
    EXPECT_EQ(coefficient_of(f, Mono::var(0)).value(), 3u);
    EXPECT_EQ(coefficient_of(f, Mono::var(2)).value(), 0u);
}

TEST(Poly, ExponentOverflowIsAnError) {
    Ring r = t_ring(7);
    Poly x = Poly::monomial(r, Mono::var(0, 200));
    EXPECT_EQ(error_kind([&] { (void)(x * x); }), ErrorKind::ExponentOverflow);
}

TEST(Parse, RationalCoefficientsAndSigns) {
    Ring r = make_ring("s", {"p1", "p2", "p3", "e8"}, {4, 8, 12, 16}, 7);
    Poly f = parse_poly("-18/5*p3*p1 + 5/36*p2^3 + 110*p2*e8", r);
    EXPECT_EQ(coefficient_of(f, Mono::var(2) * Mono::var(0)).value(), coeff_from_rational(-18, 5, 7).value());
    EXPECT_EQ(coefficient_of(f, Mono::var(1, 3)).value(), coeff_from_rational(5, 36, 7).value());
    EXPECT_EQ(to_string(parse_poly("5*p1", r)), "-2*p1");
    EXPECT_EQ(to_string(parse_poly("5*p1", r), false), "5*p1");
}

TEST(Parse, ErrorsCarryPosition) {
    Ring r = t_ring(7);
    EXPECT_EQ(error_kind([&] { parse_poly("t1 + * t2", r); }), ErrorKind::ParseError);
    EXPECT_EQ(error_kind([&] { parse_poly("t9", r); }), ErrorKind::UnknownName);
    EXPECT_EQ(error_kind([&] { parse_poly("t1/7", r); }), ErrorKind::DenominatorVanishes);
}

TEST(Parse, RoundTrip) {
    Ring r = make_ring("s", {"p1", "p2", "p3", "e8"}, {4, 8, 12, 16}, 7, true, true);
    for (const char* s : {"2*p3*p2", "p1^3 - 3*p2*p1 + 3*p3", "-e8^2 + p3*p1"}) {
        Poly f = parse_poly(s, r);
        EXPECT_EQ(parse_poly(to_string(f), r), f) << s;
    }
}

TEST(Substitution, IdentityAndIncomplete) {
    Ring r = t_ring(5);
    Poly f = parse_poly("t1^2*t2 + 3*t3^3", r);
    EXPECT_EQ(apply_substitution(f, LinearSubstitution::identity(r)), f);
    LinearSubstitution s{r, r, {Poly::var(r, 1), std::nullopt, Poly::var(r, 0)}, false};
    EXPECT_EQ(error_kind([&] { apply_substitution(f, s); }), ErrorKind::SubstitutionIncomplete);
}

TEST(Derivation, Basics) {
    Ring r = t_ring(7);
    std::vector<Poly> img;
    for (int i = 0; i < 3; ++i) img.push_back(Poly::monomial(r, Mono::var(i, 7)));
    EXPECT_TRUE(apply_derivation(Poly::constant(r, 4), img).is_zero());
    EXPECT_EQ(apply_derivation(parse_poly("t1*t2", r), img), parse_poly("t1^7*t2 + t1*t2^7", r));
    Poly f = parse_poly("t1^2 + 3*t2*t3", r);
    EXPECT_EQ(apply_derivation(f * f, img), (f * apply_derivation(f, img)).scaled(2));
}

TEST(Derivation, InconsistentShift) {
    Ring r = t_ring(7);
    std::vector<Poly> img{Poly::monomial(r, Mono::var(0, 7)), Poly::monomial(r, Mono::var(1, 3)),
                          Poly::monomial(r, Mono::var(2, 7))};
    EXPECT_EQ(error_kind([&] { apply_derivation(parse_poly("t1*t2", r), img); }), ErrorKind::DerivationDegreeError);
}

TEST(Poly, DeterministicOrder) {
    Ring r = make_ring("s", {"p1", "p2", "p3"}, {4, 8, 12}, 7, true, true);
    Poly a = parse_poly("p1^3 + p3 + p2*p1", r), b = parse_poly("p2*p1 + p3 + p1^3", r);
    EXPECT_EQ(to_string(a), to_string(b));
}
