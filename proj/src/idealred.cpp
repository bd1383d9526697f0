#include "stpow/idealred.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace stpow {

// ---------------------------------------------------------------- E7 frame

namespace {

E7Frame build_frame(u32 p) {
    E7Frame f;
    f.p = p;
    f.t = make_uniform_ring("e7-t", "t", 7, 2, p);
    f.u = make_uniform_ring("e7-u", "u", 7, 2, p);
    f.trunc = [](Mono m) { return m[0] + m[6] <= 1; };

    auto tv = [&](int i) { return Poly::var(f.t, i); };
    auto uv = [&](int i) { return Poly::var(f.u, i); };

    f.t_to_u = {f.t, f.u, {}, false};
    Poly t1 = uv(0) - uv(6).scaled(2);
    for (int i = 1; i <= 5; ++i) t1 -= uv(i);
    f.t_to_u.images.emplace_back(t1);
    for (int i = 1; i < 7; ++i) f.t_to_u.images.emplace_back(uv(i));

    f.u_to_t = {f.u, f.t, {}, false};
    Poly u1 = tv(6).scaled(2);
    for (int i = 0; i <= 5; ++i) u1 += tv(i);
    f.u_to_t.images.emplace_back(u1);
    for (int i = 1; i < 7; ++i) f.u_to_t.images.emplace_back(tv(i));

    std::vector<Poly> tvals, uvals;
    for (int i = 0; i < 7; ++i) {
        tvals.push_back(tv(i));
        uvals.push_back(*f.t_to_u.images[i]);
    }
    tvals.push_back(tv(6));
    uvals.push_back(*f.t_to_u.images[6]);
    f.t_classes = SymClassTable::build(f.t, tvals, 6);
    f.u_classes = SymClassTable::build(f.u, uvals, 6, f.trunc);

    std::vector<Poly> sq;
    for (int i = 0; i < 6; ++i) sq.push_back(mul(uvals[i], uvals[i], f.trunc));
    f.u_pont = elementary_of(sq, 6, f.trunc);
    return f;
}

SymbolTable symbols_from(const SymClassTable& tab, const std::vector<Poly>& pont) {
    SymbolTable s;
    for (int i = 1; i <= 8; ++i) {
        s.emplace("c" + std::to_string(i), tab.c[i]);
        s.emplace("q" + std::to_string(i), tab.q[i]);
    }
    for (int i = 1; i <= 6; ++i) s.emplace("p" + std::to_string(i), pont[i]);
    s.emplace("e6", tab.euler);
    return s;
}

}  // namespace

SymbolTable E7Frame::t_symbols() const {
    std::vector<Poly> sq;
    for (int i = 0; i < 6; ++i) sq.push_back(Poly::monomial(t, Mono::var(i, 2)));
    return symbols_from(t_classes, elementary_of(sq, 6));
}

SymbolTable E7Frame::u_symbols() const { return symbols_from(u_classes, u_pont); }

Poly E7Frame::to_u(const Poly& f) const {
    if (same_ring(f.ring(), t)) return apply_substitution(f, t_to_u, trunc);
    if (same_ring(f.ring(), u)) return f.filtered(trunc);
    throw Error(ErrorKind::RingMismatch, f.ring()->name + " is not an E7 torus ring");
}

const E7Frame& e7_frame(u32 p) {
    static std::mutex mu;
    static std::map<u32, std::unique_ptr<E7Frame>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<E7Frame>(build_frame(p));
    return *slot;
}

namespace {

bool is_frame_ring(const Ring& r) {
    if (r->nvars() != 7) return false;
    const E7Frame& f = e7_frame(r->p);
    return same_ring(r, f.t) || same_ring(r, f.u);
}

void check_triangular(const Ring& ring, const std::vector<SubstitutionRule>& rules) {
    const int n = ring->nvars();
    std::vector<std::vector<int>> edges(n);
    for (const auto& r : rules) {
        require_same_ring(ring, r.replacement.ring());
        if (r.power < 1) throw Error(ErrorKind::NonTriangular, "rule power must be positive");
        int lhs_deg = ring->degrees[r.var] * r.power;
        if (!r.replacement.is_zero() && (!r.replacement.is_homogeneous() || r.replacement.degree() != lhs_deg))
            throw Error(ErrorKind::NonTriangular, "replacement for " + ring->vars[r.var] + " is not of its degree");
        for (const auto& t : r.replacement.terms())
            for (int y = 0; y < n; ++y) {
                if (!t.mono[y]) continue;
                if (y == r.var) {
                    if (t.mono[y] >= r.power)
                        throw Error(ErrorKind::NonTriangular, ring->vars[y] + " rewrites to itself");
                } else {
                    edges[r.var].push_back(y);
                }
            }
    }
    std::vector<int> state(n, 0);
    std::function<void(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : edges[v]) {
            if (state[w] == 1)
                throw Error(ErrorKind::NonTriangular, "cyclic rules through " + ring->vars[v] + " and " + ring->vars[w]);
            if (state[w] == 0) dfs(w);
        }
        state[v] = 2;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0) dfs(v);
}

Poly apply_rules(const Poly& f, const std::vector<SubstitutionRule>& rules) {
    if (rules.empty()) return f;
    const Ring& ring = f.ring();
    std::unordered_map<Mono, Poly, MonoHash> memo;
    std::function<const Poly&(Mono)> nf = [&](Mono m) -> const Poly& {
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        Poly out = Poly::monomial(ring, m);
        for (const auto& r : rules) {
            if (m[r.var] < r.power) continue;
            Mono rest = m / Mono::var(r.var, r.power);
            PolyBuilder b(ring);
            for (const auto& t : r.replacement.terms()) b.add(nf(t.mono * rest), t.coeff);
            out = std::move(b).build();
            break;
        }
        return memo.emplace(m, std::move(out)).first->second;
    };
    PolyBuilder b(ring);
    for (const auto& t : f.terms()) b.add(nf(t.mono), t.coeff);
    return std::move(b).build();
}

int aug_length(Mono m, const IdealSpec& leaf, int nvars) {
    int len = 0;
    if (leaf.aug_vars.empty())
        for (int i = 0; i < nvars; ++i) len += m[i];
    else
        for (int i : leaf.aug_vars) len += m[i];
    return len;
}

// Column order for the (q1^n) slice: exp(u1)+exp(u7) ascending, then exp(u7)
// ascending, then packed exponents descending. In this order the row of
// nu * q1^n leads at nu * u2^(2n), so the generator rows are already echelon.
struct SliceKey {
    int weight;
    int e7;
    u64 neg_bits;
    auto operator<=>(const SliceKey&) const = default;
};
SliceKey slice_key(Mono m) { return {m[0] + m[6], m[6], ~m.bits()}; }

struct QSlice {
    std::unordered_map<Mono, u32, MonoHash> col;
    std::vector<Mono> mono_of;
    EchelonBasis basis;
    QSlice(u32 p, std::size_t n) : basis(p, n) {}
};

SparseVec to_columns(const Poly& f, const QSlice& s) {
    SparseVec v;
    v.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto it = s.col.find(t.mono);
        if (it == s.col.end()) throw Error(ErrorKind::IdealMismatch, "monomial outside the truncated slice");
        v.emplace_back(it->second, t.coeff);
    }
    std::sort(v.begin(), v.end());
    return v;
}

const QSlice& q_slice(u32 p, int n, int degree) {
    static std::mutex mu;
    static std::map<std::tuple<u32, int, int>, std::unique_ptr<QSlice>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, n, degree}];
    if (slot) return *slot;
    const E7Frame& fr = e7_frame(p);
    std::vector<Mono> cols;
    for (Mono m : monomials_of_degree(*fr.u, degree))
        if (fr.trunc(m)) cols.push_back(m);
    std::sort(cols.begin(), cols.end(), [](Mono a, Mono b) { return slice_key(a) < slice_key(b); });
    auto s = std::make_unique<QSlice>(p, cols.size());
    s->mono_of = cols;
    for (std::size_t i = 0; i < cols.size(); ++i) s->col.emplace(cols[i], static_cast<u32>(i));
    Poly qn = fr.u_classes.q[1].pow(n, fr.trunc);
    for (Mono nu : monomials_of_degree(*fr.u, degree - 4 * n)) {
        if (!fr.trunc(nu)) continue;
        s->basis.insert(to_columns(qn.times_mono(nu).filtered(fr.trunc), *s));
    }
    slot = std::move(s);
    return *slot;
}

Poly slice_remainder(const Poly& f, int n) {
    const u32 p = f.p();
    std::map<int, std::vector<Term>> by_degree;
    for (const auto& t : f.terms()) by_degree[f.ring()->degree(t.mono)].push_back(t);
    PolyBuilder out(f.ring());
    for (auto& [deg, terms] : by_degree) {
        Poly piece = Poly::from_terms(f.ring(), terms);
        if (deg < 4 * n) {
            out.add(piece);
            continue;
        }
        const QSlice& s = q_slice(p, n, deg);
        for (auto [c, x] : s.basis.reduce(to_columns(piece, s))) out.add(s.mono_of[c], x);
    }
    return std::move(out).build();
}

}  // namespace

// ---------------------------------------------------------------- IdealSpec

IdealSpec IdealSpec::substitution(Ring ring, std::vector<SubstitutionRule> rules) {
    check_triangular(ring, rules);
    IdealSpec s;
    s.kind = Kind::Substitution;
    s.ring = std::move(ring);
    s.rules = std::move(rules);
    return s;
}

IdealSpec IdealSpec::kill(const Ring& ring, const std::vector<std::string>& names) {
    std::vector<SubstitutionRule> rules;
    for (const auto& n : names) {
        int i = ring->var_index(n);
        if (i < 0) throw Error(ErrorKind::UnknownName, "no variable " + n + " in " + ring->name);
        rules.push_back({i, 1, Poly(ring)});
    }
    return substitution(ring, std::move(rules));
}

IdealSpec IdealSpec::c1t7_squared(Ring ring) {
    if (!is_frame_ring(ring)) throw Error(ErrorKind::IdealMismatch, "(c1,t7)^2 needs the E7 torus ring");
    IdealSpec s;
    s.kind = Kind::C1T7Squared;
    s.ring = std::move(ring);
    return s;
}

IdealSpec IdealSpec::q_power(Ring ring, int n) {
    if (!is_frame_ring(ring)) throw Error(ErrorKind::IdealMismatch, "(q1^n) needs the E7 torus ring");
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "q1 power must be positive");
    IdealSpec s;
    s.kind = Kind::QPower;
    s.ring = std::move(ring);
    s.power = n;
    return s;
}

IdealSpec IdealSpec::aug_power(Ring ring, int k, std::vector<int> vars) {
    if (!ring->free) throw Error(ErrorKind::BasisError, "I^k needs a free generator basis; " + ring->name + " is not");
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "augmentation power must be positive");
    IdealSpec s;
    s.kind = Kind::AugPower;
    s.ring = std::move(ring);
    s.power = k;
    s.aug_vars = std::move(vars);
    return s;
}

IdealSpec IdealSpec::sum(std::vector<IdealSpec> parts) {
    if (parts.empty()) throw Error(ErrorKind::IdealMismatch, "empty ideal sum");
    IdealSpec s;
    s.kind = Kind::Sum;
    s.ring = parts.front().ring;
    for (const auto& p : parts) require_same_ring(s.ring, p.ring);
    s.parts = std::move(parts);
    return s;
}

std::vector<const IdealSpec*> IdealSpec::leaves() const {
    if (kind != Kind::Sum) return {this};
    std::vector<const IdealSpec*> out;
    for (const auto& p : parts) {
        auto sub = p.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

int IdealSpec::qpower() const {
    int n = 0;
    for (const auto* l : leaves())
        if (l->kind == Kind::QPower) n = n ? std::min(n, l->power) : l->power;
    return n;
}

std::string IdealSpec::describe() const {
    switch (kind) {
        case Kind::Substitution: {
            std::string s = "(";
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const auto& r = rules[i];
                if (i) s += ",";
                Poly lhs = Poly::monomial(ring, Mono::var(r.var, r.power));
                s += to_string(lhs - r.replacement);
            }
            return s + ")";
        }
        case Kind::C1T7Squared: return "(c1,t7)^2";
        case Kind::QPower: return power == 1 ? "(q1)" : "(q1^" + std::to_string(power) + ")";
        case Kind::AugPower: {
            std::string s = "I^" + std::to_string(power);
            if (!aug_vars.empty()) {
                s += "[";
                for (std::size_t i = 0; i < aug_vars.size(); ++i) s += (i ? "," : "") + ring->vars[aug_vars[i]];
                s += "]";
            }
            return s;
        }
        case Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i].describe();
            return s;
        }
    }
    return "?";
}

// ---------------------------------------------------------------- parsing

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') {
            if (--depth < 0) throw Error(ErrorKind::ParseError, "unbalanced ')' at position " + std::to_string(i));
        } else if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced '('");
    out.push_back(trim(s.substr(start)));
    return out;
}

std::string strip_spaces(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

// The pure-power term x^k whose variable occurs nowhere else, preferring the
// variable of highest degree, then the later one.
SubstitutionRule rule_for(const Poly& g) {
    const Ring& r = g.ring();
    const Term* best = nullptr;
    int best_var = -1;
    for (const auto& t : g.terms()) {
        int v = -1, nz = 0;
        for (int i = 0; i < r->nvars(); ++i)
            if (t.mono[i]) {
                v = i;
                ++nz;
            }
        if (nz != 1) continue;
        bool alone = true;
        for (const auto& o : g.terms())
            if (&o != &t && o.mono[v]) alone = false;
        if (!alone) continue;
        if (!best || r->degrees[v] > r->degrees[best_var] || (r->degrees[v] == r->degrees[best_var] && v > best_var)) {
            best = &t;
            best_var = v;
        }
    }
    if (!best) throw Error(ErrorKind::IdealMismatch, "generator " + to_string(g) + " has no rewritable term");
    Poly lead = Poly::monomial(r, best->mono, best->coeff);
    u32 inv = inv_mod(best->coeff, r->p);
    return {best_var, best->mono[best_var], (lead - g).scaled(inv)};
}

}  // namespace

IdealSpec parse_ideal(std::string_view text, const Ring& ring, const SymbolTable& symbols) {
    std::vector<IdealSpec> parts;
    for (const std::string& part : split_top(text, '+')) {
        std::string compact = strip_spaces(part);
        if (compact.empty()) throw Error(ErrorKind::ParseError, "empty ideal summand");
        if (compact.rfind("I^", 0) == 0) {
            parts.push_back(IdealSpec::aug_power(ring, std::stoi(compact.substr(2))));
            continue;
        }
        if (compact.front() != '(') throw Error(ErrorKind::ParseError, "ideal summand must start with '(': " + part);
        std::size_t close = compact.rfind(')');
        if (close == std::string::npos) throw Error(ErrorKind::ParseError, "missing ')' in " + part);
        std::string inner = compact.substr(1, close - 1);
        std::string tail = compact.substr(close + 1);
        int outer_power = 1;
        if (!tail.empty()) {
            if (tail.size() < 2 || tail[0] != '^') throw Error(ErrorKind::ParseError, "unexpected '" + tail + "'");
            outer_power = std::stoi(tail.substr(1));
        }
        if (outer_power != 1) {
            if (inner == "c1,t7" && outer_power == 2) {
                parts.push_back(IdealSpec::c1t7_squared(ring));
                continue;
            }
            throw Error(ErrorKind::IdealMismatch, "only (c1,t7)^2 may be raised to a power");
        }
        if (inner == "q1" || inner.rfind("q1^", 0) == 0) {
            parts.push_back(IdealSpec::q_power(ring, inner == "q1" ? 1 : std::stoi(inner.substr(3))));
            continue;
        }
        std::vector<SubstitutionRule> rules;
        for (const std::string& g : split_top(inner, ',')) rules.push_back(rule_for(parse_poly(g, ring, symbols)));
        parts.push_back(IdealSpec::substitution(ring, std::move(rules)));
    }
    return parts.size() == 1 ? parts.front() : IdealSpec::sum(std::move(parts));
}

// ---------------------------------------------------------------- reduction

Poly reduce(const Poly& f, const IdealSpec& ideal) {
    std::vector<SubstitutionRule> rules;
    const IdealSpec* aug = nullptr;
    bool frame = false;
    int qn = 0;
    for (const IdealSpec* l : ideal.leaves()) {
        switch (l->kind) {
            case IdealSpec::Kind::Substitution:
                require_same_ring(f.ring(), l->ring);
                rules.insert(rules.end(), l->rules.begin(), l->rules.end());
                break;
            case IdealSpec::Kind::AugPower:
                require_same_ring(f.ring(), l->ring);
                if (!f.ring()->free) throw Error(ErrorKind::BasisError, "I^k on a non-free basis");
                if (!aug || l->power < aug->power) aug = l;
                break;
            case IdealSpec::Kind::C1T7Squared: frame = true; break;
            case IdealSpec::Kind::QPower: qn = qn ? std::min(qn, l->power) : l->power; break;
            case IdealSpec::Kind::Sum: break;
        }
    }
    if (qn && !frame) throw Error(ErrorKind::IdealMismatch, "(q1^n) is only reduced together with (c1,t7)^2");
    if (frame && (!rules.empty() || aug))
        throw Error(ErrorKind::IdealMismatch, "(c1,t7)^2 does not combine with substitution or I^k parts");
    if (aug)
        for (const auto& r : rules)
            if (!r.replacement.is_zero())
                throw Error(ErrorKind::IdealMismatch, "I^k combines only with monomial generators");
    if (rules.size() > 1) check_triangular(f.ring(), rules);

    Poly g = apply_rules(f, rules);
    if (aug) {
        const int n = g.ring()->nvars();
        g = g.filtered([&](Mono m) { return aug_length(m, *aug, n) < aug->power; });
    }
    if (frame) g = e7_frame(f.p()).to_u(g);
    if (qn) g = slice_remainder(g, qn);
    return g;
}

bool member_graded(const Poly& f, const IdealSpec& ideal) { return reduce(f, ideal).is_zero(); }

namespace {

// Division by G whose lex-leading term is lead; the remainder has no term
// divisible by lead. Works through the terms in descending lex order; every
// correction only adds smaller terms.
std::pair<Poly, Poly> lex_divide(const Poly& f, const Poly& g) {
    const Ring& r = f.ring();
    const u32 p = f.p();
    Term lead = *std::max_element(g.terms().begin(), g.terms().end(),
                                  [](const Term& a, const Term& b) { return a.mono < b.mono; });
    u32 inv = inv_mod(lead.coeff, p);
    std::map<Mono, u32, std::greater<>> rem;
    for (const auto& t : f.terms()) rem[t.mono] = t.coeff;
    PolyBuilder quot(r);
    for (auto it = rem.begin(); it != rem.end();) {
        if (!lead.mono.divides(it->first)) {
            ++it;
            continue;
        }
        Mono mu = it->first / lead.mono;
        u32 c = mul_mod(it->second, inv, p);
        quot.add(mu, c);
        u32 nc = neg_mod(c, p);
        for (const auto& t : g.terms()) {
            Mono m = t.mono * mu;
            u32 v = add_mod(rem[m], mul_mod(nc, t.coeff, p), p);
            rem[m] = v;
        }
        it = rem.erase(it);
        while (it != rem.end() && it->second == 0) it = rem.erase(it);
    }
    std::vector<Term> rt;
    for (const auto& [m, c] : rem)
        if (c) rt.push_back({m, c});
    return {std::move(quot).build(), Poly::from_terms(r, std::move(rt))};
}

struct WeightParts {
    Poly w0, w1, w7;  // f = w0 + u1 w1 + u7 w7
};

WeightParts split_weight(const Poly& f) {
    const Ring& r = f.ring();
    PolyBuilder a(r), b(r), c(r);
    for (const auto& t : f.terms()) {
        if (t.mono[0] + t.mono[6] > 1) continue;
        if (t.mono[0]) b.add(t.mono / Mono::var(0), t.coeff);
        else if (t.mono[6]) c.add(t.mono / Mono::var(6), t.coeff);
        else a.add(t.mono, t.coeff);
    }
    return {std::move(a).build(), std::move(b).build(), std::move(c).build()};
}

}  // namespace

Poly division_normal_form(const Poly& f, int n, u32 p) {
    const E7Frame& fr = e7_frame(p);
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "q1 power must be positive");
    WeightParts fp = split_weight(fr.to_u(f));
    WeightParts q = split_weight(fr.u_classes.q[1]);
    Poly q0n1 = q.w0.pow(n - 1);
    Poly q0n = q0n1 * q.w0;
    auto [h, r0] = lex_divide(fp.w0, q0n);
    Poly corr = (h * q0n1).scaled(static_cast<u32>(n % p));
    Poly r1 = lex_divide(fp.w1 - corr * q.w1, q0n).second;
    Poly r7 = lex_divide(fp.w7 - corr * q.w7, q0n).second;
    return r0 + r1 * Poly::var(fr.u, 0) + r7 * Poly::var(fr.u, 6);
}

bool member_division(const Poly& f, int n, u32 p) { return division_normal_form(f, n, p).is_zero(); }

// ---------------------------------------------------------------- slices and stability

std::vector<Poly> ideal_slice_span(const IdealSpec& ideal, int degree) {
    std::vector<Poly> out;
    const Ring& ring = ideal.ring;
    auto times_all = [&](const Poly& g) {
        if (g.is_zero()) return;
        int rest = degree - g.degree();
        if (rest < 0) return;
        for (Mono m : monomials_of_degree(*ring, rest)) out.push_back(g.times_mono(m));
    };
    for (const IdealSpec* l : ideal.leaves()) {
        switch (l->kind) {
            case IdealSpec::Kind::Substitution:
                for (const auto& r : l->rules) times_all(Poly::monomial(ring, Mono::var(r.var, r.power)) - r.replacement);
                break;
            case IdealSpec::Kind::AugPower:
                for (Mono m : monomials_of_degree(*ring, degree))
                    if (aug_length(m, *l, ring->nvars()) >= l->power) out.push_back(Poly::monomial(ring, m));
                break;
            case IdealSpec::Kind::C1T7Squared: {
                const E7Frame& fr = e7_frame(ring->p);
                bool t = same_ring(ring, fr.t);
                Poly a = t ? fr.t_classes.c[1] : Poly::var(ring, 0);
                Poly b = Poly::var(ring, 6);
                times_all(a * a);
                times_all(a * b);
                times_all(b * b);
                break;
            }
            case IdealSpec::Kind::QPower: {
                const E7Frame& fr = e7_frame(ring->p);
                Poly q1 = same_ring(ring, fr.t) ? fr.t_classes.q[1] : fr.u_classes.q[1];
                times_all(q1.pow(l->power));
                break;
            }
            case IdealSpec::Kind::Sum: break;
        }
    }
    return out;
}

Poly apply_theta(const SteenrodOp& op, const Poly& f) {
    if (op.p != f.p()) throw Error(ErrorKind::RingMismatch, "operation prime differs from ring prime");
    const auto& d = f.ring()->degrees;
    bool torus = std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
    if (!torus) return apply_op(op, f);
    Poly g = f;
    for (int i = 0; i < op.iterate; ++i) g = p1_on_t_ring(g);
    return g;
}

StabilityReport theta_stability_report(const IdealSpec& ideal, const SteenrodOp& op, int source_degree,
                                       const std::vector<Mono>& targets, const IdealSpec* working) {
    const IdealSpec& w = working ? *working : ideal;
    StabilityReport rep;
    rep.ideal = ideal.describe();
    std::vector<bool> hit(targets.size(), false);
    auto span = ideal_slice_span(ideal, source_degree);
    rep.ambiguity_size = span.size();
    for (const Poly& b : span) {
        Poly img = reduce(apply_theta(op, b), w);
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (!hit[i] && img.coeff(targets[i])) hit[i] = true;
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (hit[i]) rep.hit_targets.push_back(targets[i]);
    rep.pass = rep.hit_targets.empty();
    return rep;
}

}  // namespace stpow
