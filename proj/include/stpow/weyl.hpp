#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "stpow/idealred.hpp"
#include "stpow/linalg.hpp"

namespace stpow {

using Rational = boost::rational<long long>;
using RootVec = std::array<Rational, 8>;

Rational inner(const RootVec& a, const RootVec& b);

// E7 inside R^8 (restricted to x7 + x8 = 0), with t1 = -e1, t8 = -e8 and
// t_i = e_i otherwise.
struct RootSystem {
    std::vector<RootVec> simple;  // alpha_1..alpha_7
    std::array<int, 8> t_sign;    // t_i = t_sign[i] * e_i

    static RootSystem e7();
    // 2(a_i,a_j)/(a_j,a_j).
    std::vector<std::vector<int>> cartan() const;
};

// The E7 diagram: chain a1-a3-a4-a5-a6-a7 with a2 attached to a4.
std::vector<std::vector<int>> e7_cartan_from_diagram();

// The reflection in alpha acting on the seven torus variables of the frame
// (t8 is replaced by t7 after the reflection).
LinearSubstitution reflection_from_root(const RootSystem& rs, const RootVec& alpha, u32 p);
// The same map written in u-coordinates.
LinearSubstitution transport_to_u(const LinearSubstitution& on_t, const E7Frame& frame);
const LinearSubstitution& phi1_u(u32 p);
const LinearSubstitution& phi1_t(u32 p);

const std::vector<int>& xbar_names();
// xbar_d in Z/p[p1..p5, e6].
Poly xbar(int name, u32 p);
// Spin(12) polynomial expanded in u-coordinates, truncated mod (u1,u7)^2.
Poly spin12_to_u(const Poly& f);

// The ideal under which the degree-d invariants are classified:
// (c1,t7)^2, plus (q1^2) from degree 20 and (q1) from degree 28.
IdealSpec invariant_ideal(int degree, u32 p);
// The ideal of the conclusion, in Spin(12): none, (p1^2), (p1).
IdealSpec conclusion_ideal(int degree, u32 p);

// Normal form of phi1(f) - f in the given ideal (u-ring).
Poly phi1_residue(const Poly& spin12_poly, const IdealSpec& ideal);
bool verify_xbar_invariance(int name, u32 p);
bool verify_xbar_invariance(int name, u32 p, const IdealSpec& ideal);

// Z/p[q1..q5, e6]; mapped to Spin(12) by q_i -> p_i.
Ring invariant_ring(u32 p);

struct InvariantProblem {
    int degree = 0;
    u32 p = 0;
    IdealSpec ideal;  // over the frame's u-ring
    bool exclude_qpower = false;
};

struct SolutionSpace {
    std::vector<Mono> ansatz;       // monomials of the invariant ring
    std::vector<DenseRow> basis;    // reduced echelon, over the ansatz
    std::size_t dimension() const { return basis.size(); }
};

std::vector<Mono> ansatz_monomials(int degree, u32 p, int exclude_q1_power = 0);
SolutionSpace solve_phi1_invariants(const InvariantProblem& problem);

struct InvariantCheckResult {
    int degree = 0;
    u32 p = 0;
    std::string ideal;
    std::string conclusion;
    std::size_t solution_dim = 0;
    std::size_t reduced_dim = 0;
    std::size_t expected_dim = 0;
    bool span_equal = false;
    bool xbar_products_invariant = false;
    std::vector<std::string> expected_span;
};

// The stated x-bar products for each classified degree.
std::vector<std::vector<int>> expected_products(int degree);
InvariantCheckResult check_invariant_degree(int degree, u32 p);

}  // namespace stpow
