#include "stpow/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace stpow {

namespace {

struct Keyed {
    int deg;
    Mono m;
    u32 c;
};

void sort_and_merge(const RingSpec& ring, std::vector<Term>& terms) {
    std::vector<Keyed> k;
    k.reserve(terms.size());
    for (const auto& t : terms)
        if (t.coeff) k.push_back({ring.degree(t.mono), t.mono, t.coeff});
    std::sort(k.begin(), k.end(), [](const Keyed& a, const Keyed& b) {
        return a.deg != b.deg ? a.deg > b.deg : a.m > b.m;
    });
    terms.clear();
    for (const auto& x : k) {
        if (!terms.empty() && terms.back().mono == x.m) {
            terms.back().coeff = add_mod(terms.back().coeff, x.c, ring.p);
            if (terms.back().coeff == 0) terms.pop_back();
        } else {
            terms.push_back({x.m, x.c});
        }
    }
}

bool term_before(const RingSpec& r, const Term& a, const Term& b) {
    int da = r.degree(a.mono), db = r.degree(b.mono);
    return da != db ? da > db : a.mono > b.mono;
}

}  // namespace

Poly Poly::constant(Ring ring, i64 c) {
    Poly f(std::move(ring));
    u32 v = residue(c, f.p());
    if (v) f.terms_.push_back({Mono{}, v});
    return f;
}

Poly Poly::var(Ring ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw Error(ErrorKind::IndexOutOfRange, "variable " + std::to_string(i));
    return monomial(std::move(ring), Mono::var(i));
}

Poly Poly::monomial(Ring ring, Mono m, u32 c) {
    Poly f(std::move(ring));
    c %= f.p();
    if (c) f.terms_.push_back({m, c});
    return f;
}

Poly Poly::from_terms(Ring ring, std::vector<Term> terms) {
    Poly f(std::move(ring));
    for (auto& t : terms) t.coeff %= f.p();
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

void Poly::normalize() { sort_and_merge(*ring_, terms_); }

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = ring_->degree(terms_.front().mono);
    return ring_->degree(terms_.back().mono) == d;
}

int Poly::degree() const { return terms_.empty() ? -1 : ring_->degree(terms_.front().mono); }

u32 Poly::coeff(Mono m) const {
    Term probe{m, 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe,
                               [&](const Term& a, const Term& b) { return term_before(*ring_, a, b); });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

Poly Poly::operator-() const {
    Poly f = *this;
    for (auto& t : f.terms_) t.coeff = neg_mod(t.coeff, p());
    return f;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.cend() && term_before(*ring_, *a, *b))) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || term_before(*ring_, *b, *a)) {
            out.push_back(*b++);
        } else {
            u32 c = add_mod(a->coeff, b->coeff, p());
            if (c) out.push_back({a->mono, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = mul(*this, o); }

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

bool operator==(const Poly& a, const Poly& b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

Poly Poly::scaled(u32 c) const {
    c %= p();
    if (c == 0) return Poly(ring_);
    Poly f = *this;
    for (auto& t : f.terms_) t.coeff = mul_mod(t.coeff, c, p());
    return f;
}

Poly Poly::scaled(Coeff c) const {
    if (c.modulus() != p()) throw Error(ErrorKind::RingMismatch, "scalar modulus differs from ring");
    return scaled(c.value());
}

Poly Poly::times_mono(Mono m, u32 c) const {
    c %= p();
    if (c == 0) return Poly(ring_);
    Poly f(ring_);
    f.terms_.reserve(terms_.size());
    // multiplying by a monomial keeps lex order within a degree
    for (const auto& t : terms_) f.terms_.push_back({t.mono * m, mul_mod(t.coeff, c, p())});
    return f;
}

Poly Poly::pow(unsigned k, const MonoFilter& keep) const {
    Poly r = Poly::constant(ring_, 1), b = *this;
    while (k) {
        if (k & 1) r = mul(r, b, keep);
        k >>= 1;
        if (k) b = mul(b, b, keep);
    }
    return r;
}

Poly Poly::filtered(const MonoFilter& keep) const {
    Poly f(ring_);
    for (const auto& t : terms_)
        if (keep(t.mono)) f.terms_.push_back(t);
    return f;
}

struct PolyBuilder::Impl {
    std::unordered_map<Mono, u32, MonoHash> acc;
};

PolyBuilder::PolyBuilder(Ring ring) : ring_(std::move(ring)), impl_(std::make_shared<Impl>()) {}

void PolyBuilder::add(Mono m, u32 c) {
    c %= ring_->p;
    if (!c) return;
    auto [it, fresh] = impl_->acc.try_emplace(m, c);
    if (!fresh) it->second = add_mod(it->second, c, ring_->p);
}

void PolyBuilder::add(const Poly& f, u32 scale) {
    require_same_ring(ring_, f.ring());
    for (const auto& t : f.terms()) add(t.mono, mul_mod(t.coeff, scale, ring_->p));
}

void PolyBuilder::add_product(const Poly& f, Mono m, u32 c) {
    for (const auto& t : f.terms()) add(t.mono * m, mul_mod(t.coeff, c, ring_->p));
}

Poly PolyBuilder::build() && {
    std::vector<Term> terms;
    terms.reserve(impl_->acc.size());
    for (const auto& [m, c] : impl_->acc)
        if (c) terms.push_back({m, c});
    return Poly::from_terms(ring_, std::move(terms));
}

Poly mul(const Poly& a, const Poly& b, const MonoFilter& keep) {
    require_same_ring(a.ring(), b.ring());
    const u32 p = a.p();
    if (a.is_zero() || b.is_zero()) return Poly(a.ring());
    PolyBuilder acc(a.ring());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            Mono m = x.mono * y.mono;
            if (keep && !keep(m)) continue;
            acc.add(m, mul_mod(x.coeff, y.coeff, p));
        }
    return std::move(acc).build();
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
Poly poly_scale(const Poly& a, Coeff c) { return a.scaled(c); }

Coeff coefficient_of(const Poly& f, Mono m) { return Coeff::raw(f.coeff(m), f.p()); }

LinearSubstitution LinearSubstitution::identity(const Ring& r) {
    LinearSubstitution s{r, r, {}, true};
    for (int i = 0; i < r->nvars(); ++i) s.images.emplace_back(Poly::var(r, i));
    return s;
}

bool LinearSubstitution::is_degree_preserving() const {
    for (int i = 0; i < source->nvars(); ++i) {
        if (i >= static_cast<int>(images.size()) || !images[i]) return false;
        const Poly& img = *images[i];
        if (!img.is_homogeneous()) return false;
        if (!img.is_zero() && img.degree() != source->degrees[i]) return false;
    }
    return true;
}

Poly apply_substitution(const Poly& f, const LinearSubstitution& s, const MonoFilter& keep) {
    require_same_ring(f.ring(), s.source);
    const int n = s.source->nvars();
    std::vector<int> maxe(n, 0);
    for (const auto& t : f.terms())
        for (int i = 0; i < n; ++i) maxe[i] = std::max(maxe[i], t.mono[i]);
    for (int i = 0; i < n; ++i)
        if (maxe[i] && (i >= static_cast<int>(s.images.size()) || !s.images[i]))
            throw Error(ErrorKind::SubstitutionIncomplete, "no image for " + s.source->vars[i]);
    // powers[i][e] = image_i^e
    std::vector<std::vector<Poly>> powers(n);
    for (int i = 0; i < n; ++i) {
        powers[i].push_back(Poly::constant(s.target, 1));
        for (int e = 1; e <= maxe[i]; ++e) powers[i].push_back(mul(powers[i].back(), *s.images[i], keep));
    }
    PolyBuilder out(s.target);
    for (const auto& t : f.terms()) {
        Poly acc = Poly::constant(s.target, t.coeff);
        for (int i = 0; i < n && !acc.is_zero(); ++i)
            if (t.mono[i]) acc = mul(acc, powers[i][t.mono[i]], keep);
        out.add(acc);
    }
    return std::move(out).build();
}

Poly apply_derivation(const Poly& f, const std::vector<Poly>& images) {
    const Ring& r = f.ring();
    const int n = r->nvars();
    if (static_cast<int>(images.size()) != n)
        throw Error(ErrorKind::DerivationDegreeError, "need one image per variable");
    std::optional<int> shift;
    for (int i = 0; i < n; ++i) {
        require_same_ring(r, images[i].ring());
        if (images[i].is_zero()) continue;
        if (!images[i].is_homogeneous())
            throw Error(ErrorKind::DerivationDegreeError, "image of " + r->vars[i] + " is not homogeneous");
        int s = images[i].degree() - r->degrees[i];
        if (shift && *shift != s)
            throw Error(ErrorKind::DerivationDegreeError,
                        "image of " + r->vars[i] + " shifts degree by " + std::to_string(s) + ", expected " +
                            std::to_string(*shift));
        shift = s;
    }
    PolyBuilder out(r);
    const u32 p = r->p;
    for (const auto& t : f.terms())
        for (int i = 0; i < n; ++i) {
            int e = t.mono[i];
            if (!e || images[i].is_zero()) continue;
            u32 c = mul_mod(t.coeff, static_cast<u32>(e) % p, p);
            if (c) out.add_product(images[i], t.mono / Mono::var(i), c);
        }
    return std::move(out).build();
}

}  // namespace stpow
