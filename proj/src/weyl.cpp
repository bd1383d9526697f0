#include "stpow/weyl.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace stpow {

Rational inner(const RootVec& a, const RootVec& b) {
    Rational s = 0;
    for (int i = 0; i < 8; ++i) s += a[i] * b[i];
    return s;
}

RootSystem RootSystem::e7() {
    RootSystem rs;
    rs.t_sign = {-1, 1, 1, 1, 1, 1, 1, -1};
    auto e = [](int i) {
        RootVec v{};
        v[i - 1] = 1;
        return v;
    };
    auto add = [](RootVec a, const RootVec& b, Rational k) {
        for (int i = 0; i < 8; ++i) a[i] += k * b[i];
        return a;
    };
    RootVec a1{};
    for (int i = 0; i < 8; ++i) a1[i] = (i == 0 || i == 7) ? Rational(1, 2) : Rational(-1, 2);
    rs.simple.push_back(a1);
    rs.simple.push_back(add(e(1), e(2), 1));
    for (int i = 3; i <= 7; ++i) rs.simple.push_back(add(e(i - 1), e(i - 2), -1));
    return rs;
}

std::vector<std::vector<int>> RootSystem::cartan() const {
    const std::size_t n = simple.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = 2 * inner(simple[i], simple[j]) / inner(simple[j], simple[j]);
            if (v.denominator() != 1LL) throw Error(ErrorKind::BasisError, "non-integral Cartan entry");
            c[i][j] = static_cast<int>(v.numerator());
        }
    return c;
}

std::vector<std::vector<int>> e7_cartan_from_diagram() {
    std::vector<std::vector<int>> c(7, std::vector<int>(7, 0));
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
    for (int i = 0; i < 7; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
    return c;
}

LinearSubstitution reflection_from_root(const RootSystem& rs, const RootVec& alpha, u32 p) {
    Rational norm = inner(alpha, alpha);
    if (norm == Rational(0)) throw Error(ErrorKind::BasisError, "zero root");
    const E7Frame& fr = e7_frame(p);
    // t_i(s v) = t_i(v) - (2/(a,a)) sign_i a_i sum_j a_j sign_j t_j(v)
    auto coeff = [&](const Rational& r) { return coeff_from_rational(r.numerator(), r.denominator(), p).value(); };
    auto t8 = [](int j) { return j == 7 ? 6 : j; };
    LinearSubstitution s{fr.t, fr.t, {}, true};
    for (int i = 0; i < 7; ++i) {
        PolyBuilder b(fr.t);
        b.add(Mono::var(i), 1);
        Rational ki = Rational(2) / norm * rs.t_sign[i] * alpha[i];
        for (int j = 0; j < 8; ++j) {
            Rational k = -ki * alpha[j] * rs.t_sign[j];
            if (k != Rational(0)) b.add(Mono::var(t8(j)), coeff(k));
        }
        s.images.emplace_back(std::move(b).build());
    }
    return s;
}

LinearSubstitution transport_to_u(const LinearSubstitution& on_t, const E7Frame& fr) {
    LinearSubstitution s{fr.u, fr.u, {}, on_t.involution};
    for (int i = 0; i < 7; ++i) {
        Poly ti = *fr.u_to_t.images[i];
        s.images.emplace_back(apply_substitution(apply_substitution(ti, on_t), fr.t_to_u));
    }
    return s;
}

namespace {

struct PhiCache {
    LinearSubstitution t, u;
};

const PhiCache& phi_cache(u32 p) {
    static std::mutex mu;
    static std::map<u32, std::unique_ptr<PhiCache>> cache;
    // e7_frame takes its own lock, so build it first.
    const E7Frame& fr = e7_frame(p);
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) {
        RootSystem rs = RootSystem::e7();
        auto t = reflection_from_root(rs, rs.simple[0], p);
        slot = std::make_unique<PhiCache>(PhiCache{t, transport_to_u(t, fr)});
    }
    return *slot;
}

}  // namespace

const LinearSubstitution& phi1_t(u32 p) { return phi_cache(p).t; }
const LinearSubstitution& phi1_u(u32 p) { return phi_cache(p).u; }

const std::vector<int>& xbar_names() {
    static const std::vector<int> names{4, 12, 16, 20, 24, 28, 36};
    return names;
}

Poly xbar(int name, u32 p) {
    static const std::map<int, const char*> text{
        {4, "p1"},
        {12, "-6*p3 + p2*p1 + 60*e6"},
        {16, "12*p4 + p2^2 - 1/2*p2*p1^2 - 36*p1*e6"},
        {20, "p5 - p2*e6"},
        {24, "p4*p2 - 1/36*p2^3 - 12*p3*e6 + 3*p2*p1*e6 + 48*e6^2"},
        {28, "p5*p2 - 3*p4*e6 - 1/4*p2^2*e6"},
        {36, "p5*p2^2 - 6*p4*p2*e6 + 36*p3*e6^2 - 1/2*p2^3*e6 - 72*e6^3"},
    };
    auto it = text.find(name);
    if (it == text.end()) throw Error(ErrorKind::UnknownName, "no class xbar" + std::to_string(name));
    return parse_poly(it->second, spin_ring(6, p)->free_ring());
}

namespace {

// Images of the Spin(12) (or invariant-ring) generators in u, by exponent
// vector; both rings share the layout (x1..x5, e6).
class UExpander {
public:
    UExpander(const E7Frame& fr, std::vector<Poly> gens) : fr_(fr), gens_(std::move(gens)) {
        for (const auto& g : gens_) phi_gens_.push_back(apply_substitution(g, phi1_u(fr.p), fr.trunc));
    }
    // Memo entries never move, so the references outlive the lock.
    const Poly& plain(Mono m) {
        std::lock_guard lock(mu_);
        return get(m).first;
    }
    const Poly& phi(Mono m) {
        std::lock_guard lock(mu_);
        return get(m).second;
    }

private:
    const std::pair<Poly, Poly>& get(Mono m) {
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        std::pair<Poly, Poly> v;
        if (m.is_one()) {
            v = {Poly::constant(fr_.u, 1), Poly::constant(fr_.u, 1)};
        } else {
            int k = 0;
            while (m[k] == 0) ++k;
            const auto& rest = get(m / Mono::var(k));
            v = {mul(rest.first, gens_[k], fr_.trunc), mul(rest.second, phi_gens_[k], fr_.trunc)};
        }
        return memo_.emplace(m, std::move(v)).first->second;
    }

    const E7Frame& fr_;
    std::vector<Poly> gens_, phi_gens_;
    std::unordered_map<Mono, std::pair<Poly, Poly>, MonoHash> memo_;
    std::mutex mu_;
};

std::vector<Poly> spin12_gens_u(const E7Frame& fr) {
    std::vector<Poly> g(fr.u_pont.begin() + 1, fr.u_pont.begin() + 6);
    g.push_back(fr.u_classes.euler);
    return g;
}

std::vector<Poly> invariant_gens_u(const E7Frame& fr) {
    std::vector<Poly> g(fr.u_classes.q.begin() + 1, fr.u_classes.q.begin() + 6);
    g.push_back(fr.u_classes.euler);
    return g;
}

UExpander& spin12_expander(u32 p) {
    static std::mutex mu;
    static std::map<u32, std::unique_ptr<UExpander>> cache;
    const E7Frame& fr = e7_frame(p);
    phi1_u(p);
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<UExpander>(fr, spin12_gens_u(fr));
    return *slot;
}

}  // namespace

Poly spin12_to_u(const Poly& f) {
    const u32 p = f.p();
    require_same_ring(f.ring(), spin_ring(6, p)->free_ring());
    auto& ex = spin12_expander(p);
    PolyBuilder b(e7_frame(p).u);
    for (const auto& t : f.terms()) b.add(ex.plain(t.mono), t.coeff);
    return std::move(b).build();
}

IdealSpec invariant_ideal(int degree, u32 p) {
    const Ring& u = e7_frame(p).u;
    IdealSpec base = IdealSpec::c1t7_squared(u);
    if (degree < 20) return base;
    return IdealSpec::sum({base, IdealSpec::q_power(u, degree < 28 ? 2 : 1)});
}

IdealSpec conclusion_ideal(int degree, u32 p) {
    const Ring& r = spin_ring(6, p)->free_ring();
    if (degree < 20) return IdealSpec::substitution(r, {});
    return IdealSpec::substitution(r, {{0, degree < 28 ? 2 : 1, Poly(r)}});
}

Poly phi1_residue(const Poly& f, const IdealSpec& ideal) {
    const u32 p = f.p();
    require_same_ring(f.ring(), spin_ring(6, p)->free_ring());
    auto& ex = spin12_expander(p);
    PolyBuilder b(e7_frame(p).u);
    for (const auto& t : f.terms()) {
        b.add(ex.phi(t.mono), t.coeff);
        b.add(ex.plain(t.mono), neg_mod(t.coeff, p));
    }
    return reduce(std::move(b).build(), ideal);
}

bool verify_xbar_invariance(int name, u32 p, const IdealSpec& ideal) {
    return phi1_residue(xbar(name, p), ideal).is_zero();
}

bool verify_xbar_invariance(int name, u32 p) { return verify_xbar_invariance(name, p, invariant_ideal(name, p)); }

Ring invariant_ring(u32 p) {
    return make_ring("e7-inv", {"q1", "q2", "q3", "q4", "q5", "e6"}, {4, 8, 12, 16, 20, 12}, p, true, true);
}

std::vector<Mono> ansatz_monomials(int degree, u32 p, int exclude_q1_power) {
    std::vector<Mono> out;
    for (Mono m : monomials_of_degree(*invariant_ring(p), degree))
        if (!exclude_q1_power || m[0] < exclude_q1_power) out.push_back(m);
    return out;
}

SolutionSpace solve_phi1_invariants(const InvariantProblem& pr) {
    const E7Frame& fr = e7_frame(pr.p);
    phi1_u(pr.p);
    SolutionSpace sol;
    sol.ansatz = ansatz_monomials(pr.degree, pr.p, pr.exclude_qpower ? pr.ideal.qpower() : 0);
    if (sol.ansatz.empty()) throw Error(ErrorKind::IndexOutOfRange, "empty ansatz in degree " + std::to_string(pr.degree));
    UExpander ex(fr, invariant_gens_u(fr));
    std::unordered_map<Mono, u32, MonoHash> col;
    std::vector<SparseVec> images;
    for (Mono m : sol.ansatz) {
        Poly d = reduce(ex.phi(m) - ex.plain(m), pr.ideal);
        SparseVec v;
        for (const auto& t : d.terms()) {
            auto [it, fresh] = col.try_emplace(t.mono, static_cast<u32>(col.size()));
            v.emplace_back(it->second, t.coeff);
        }
        std::sort(v.begin(), v.end());
        images.push_back(std::move(v));
    }
    sol.basis = kernel_of(images, pr.p);
    return sol;
}

std::vector<std::vector<int>> expected_products(int degree) {
    switch (degree) {
        case 4: return {{4}};
        case 12: return {{12}, {4, 4, 4}};
        case 16: return {{16}, {12, 4}, {4, 4, 4, 4}};
        case 20: return {{20}, {16, 4}};
        case 24: return {{24}, {20, 4}, {12, 12}};
        case 28: return {{28}, {16, 12}};
        case 36: return {{36}, {24, 12}, {20, 16}, {12, 12, 12}};
        default: throw Error(ErrorKind::UnknownName, "no classification in degree " + std::to_string(degree));
    }
}

namespace {

std::size_t span_rank(const std::vector<Poly>& polys, std::unordered_map<Mono, u32, MonoHash>& col, u32 p) {
    std::vector<SparseVec> vs;
    for (const auto& f : polys) {
        SparseVec v;
        for (const auto& t : f.terms()) {
            auto [it, fresh] = col.try_emplace(t.mono, static_cast<u32>(col.size()));
            v.emplace_back(it->second, t.coeff);
        }
        std::sort(v.begin(), v.end());
        vs.push_back(std::move(v));
    }
    EchelonBasis eb(p, col.size());
    for (const auto& v : vs) eb.insert(v);
    return eb.rank();
}

}  // namespace

InvariantCheckResult check_invariant_degree(int degree, u32 p) {
    InvariantCheckResult res;
    res.degree = degree;
    res.p = p;
    auto prods = expected_products(degree);
    IdealSpec ideal = invariant_ideal(degree, p);
    IdealSpec concl = conclusion_ideal(degree, p);
    res.ideal = ideal.describe();
    res.conclusion = degree < 20 ? "(t7)" : "(t7," + concl.describe().substr(1);

    SolutionSpace sol = solve_phi1_invariants({degree, p, ideal, false});
    res.solution_dim = sol.dimension();

    const Ring& s12 = spin_ring(6, p)->free_ring();
    std::vector<Poly> reduced;
    for (const auto& v : sol.basis) {
        PolyBuilder b(s12);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) b.add(sol.ansatz[i], v[i]);
        reduced.push_back(reduce(std::move(b).build(), concl));
    }
    std::vector<Poly> expected;
    res.xbar_products_invariant = true;
    for (const auto& prod : prods) {
        Poly x = Poly::constant(s12, 1);
        std::string nm;
        for (int d : prod) {
            x = x * xbar(d, p);
            nm += (nm.empty() ? "xbar" : "*xbar") + std::to_string(d);
        }
        res.expected_span.push_back(nm);
        if (!phi1_residue(x, ideal).is_zero()) res.xbar_products_invariant = false;
        expected.push_back(reduce(x, concl));
    }
    std::unordered_map<Mono, u32, MonoHash> col;
    res.reduced_dim = span_rank(reduced, col, p);
    res.expected_dim = span_rank(expected, col, p);
    std::vector<Poly> both = reduced;
    both.insert(both.end(), expected.begin(), expected.end());
    std::size_t joint = span_rank(both, col, p);
    res.span_equal = joint == res.reduced_dim && joint == res.expected_dim;
    return res;
}

}  // namespace stpow
