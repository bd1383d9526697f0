#pragma once

#include <string>
#include <vector>

#include "stpow/linalg.hpp"
#include "stpow/parse.hpp"
#include "stpow/steenrod.hpp"
#include "stpow/symfun.hpp"

namespace stpow {

// E7 torus in seven variables (t8 identified with t7) and the u-coordinates
// u1 = c1 = t1+...+t6+2t7, u_i = t_i (2 <= i <= 7), in which (c1,t7)^2 is the
// monomial ideal (u1,u7)^2.
struct E7Frame {
    u32 p = 0;
    Ring t;
    Ring u;
    LinearSubstitution t_to_u;
    LinearSubstitution u_to_t;
    MonoFilter trunc;  // keeps monomials with exp(u1) + exp(u7) <= 1
    SymClassTable t_classes;  // values t1..t7, t7; euler = e6 = t1...t6
    SymClassTable u_classes;  // the same in u-coordinates, truncated
    std::vector<Poly> u_pont;  // p_i of t1..t6 in u, truncated

    // c1..c8, q1..q8, p1..p6, e6 as polynomials over t.
    SymbolTable t_symbols() const;
    // The same names over u, truncated.
    SymbolTable u_symbols() const;
    // t-ring input is moved to u and truncated; u-ring input is truncated.
    Poly to_u(const Poly& f) const;
};

const E7Frame& e7_frame(u32 p);

// x^power -> replacement, replacement homogeneous of the same degree.
struct SubstitutionRule {
    int var = 0;
    int power = 1;
    Poly replacement;
};

struct IdealSpec {
    enum class Kind { Substitution, C1T7Squared, QPower, AugPower, Sum };
    Kind kind = Kind::Sum;
    Ring ring;
    std::vector<SubstitutionRule> rules;
    int power = 0;              // n in (q1^n), k in I^k
    std::vector<int> aug_vars;  // generators counted by I; empty means all
    std::vector<IdealSpec> parts;

    static IdealSpec substitution(Ring ring, std::vector<SubstitutionRule> rules);
    // Generators x -> 0 given by name.
    static IdealSpec kill(const Ring& ring, const std::vector<std::string>& names);
    static IdealSpec c1t7_squared(Ring ring);
    static IdealSpec q_power(Ring ring, int n);
    static IdealSpec aug_power(Ring ring, int k, std::vector<int> vars = {});
    static IdealSpec sum(std::vector<IdealSpec> parts);

    // Flattened view of a Sum.
    std::vector<const IdealSpec*> leaves() const;
    int qpower() const;  // 0 when there is no (q1^n) part
    std::string describe() const;
};

// "(t7)", "(p1)+I^3", "(c1,t7)^2+(q1^2)", "(p1,p4+3*p2^2,e6)". Each listed
// generator becomes a rewriting rule for its highest pure-power term.
IdealSpec parse_ideal(std::string_view text, const Ring& ring, const SymbolTable& symbols = {});

// Canonical normal form. Ideals involving (c1,t7)^2 return u-ring polynomials.
// For (q1^n) parts the result is the remainder against the graded slice of
// the ideal, which is canonical, so congruence is equality of normal forms.
Poly reduce(const Poly& f, const IdealSpec& ideal);

// Slice route: row reduction against {monomial * q1^n}.
bool member_graded(const Poly& f, const IdealSpec& ideal);
// Division route for (c1,t7)^2 + (q1^n): divide the u1,u7-free part by Q0^n in
// u2, then correct the linear parts.
Poly division_normal_form(const Poly& f, int n, u32 p);
bool member_division(const Poly& f, int n, u32 p);

// A spanning set of the degree-d part of the ideal in its ring.
std::vector<Poly> ideal_slice_span(const IdealSpec& ideal, int degree);

struct StabilityReport {
    bool pass = true;
    std::size_t ambiguity_size = 0;
    std::vector<Mono> hit_targets;
    std::string ideal;
};

// Whether theta applied to anything in the degree-d slice of the ideal can
// reach the target monomials after reduction by the working ideal (the ideal
// itself when none is given).
StabilityReport theta_stability_report(const IdealSpec& ideal, const SteenrodOp& op, int source_degree,
                                       const std::vector<Mono>& targets, const IdealSpec* working = nullptr);

// theta on any supported ring: iterated t-derivation on degree-2 rings, the
// Spin-ring P^1 otherwise.
Poly apply_theta(const SteenrodOp& op, const Poly& f);

}  // namespace stpow
