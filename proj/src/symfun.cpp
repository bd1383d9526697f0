#include "stpow/symfun.hpp"

#include <map>
#include <mutex>

namespace stpow {

std::vector<Poly> elementary_of(const std::vector<Poly>& values, int kmax, const MonoFilter& keep) {
    if (values.empty()) throw Error(ErrorKind::IndexOutOfRange, "no values");
    const Ring& r = values.front().ring();
    std::vector<Poly> e(kmax + 1, Poly(r));
    e[0] = Poly::constant(r, 1);
    int done = 0;
    for (const auto& v : values) {
        ++done;
        for (int k = std::min(done, kmax); k >= 1; --k) e[k] += mul(e[k - 1], v, keep);
    }
    return e;
}

SymClassTable SymClassTable::build(const Ring& ring, const std::vector<Poly>& values, int euler_count,
                                   const MonoFilter& keep) {
    SymClassTable t;
    t.ring = ring;
    t.count = static_cast<int>(values.size());
    t.c = elementary_of(values, t.count, keep);
    std::vector<Poly> sq;
    for (const auto& v : values) sq.push_back(mul(v, v, keep));
    t.q = elementary_of(sq, t.count, keep);
    t.s.assign(t.count + 1, Poly(ring));
    t.s[0] = Poly::constant(ring, t.count);
    std::vector<Poly> pw = sq;
    for (int k = 1; k <= t.count; ++k) {
        for (const auto& x : pw) t.s[k] += x;
        if (k < t.count)
            for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = mul(pw[i], sq[i], keep);
    }
    t.euler = Poly::constant(ring, 1);
    for (int i = 0; i < euler_count; ++i) t.euler = mul(t.euler, values[i], keep);
    return t;
}

Ring make_c_ring(int n, u32 p) {
    std::vector<std::string> v;
    std::vector<int> d;
    for (int i = 1; i <= n; ++i) {
        v.push_back("c" + std::to_string(i));
        d.push_back(2 * i);
    }
    return make_ring("c" + std::to_string(n), v, d, p, false);
}

Poly q_from_c(int i, const Ring& c_ring) {
    const int n = c_ring->nvars();
    if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "q index " + std::to_string(i));
    auto c = [&](int j) {
        if (j == 0) return Poly::constant(c_ring, 1);
        if (j > n) return Poly(c_ring);
        return Poly::var(c_ring, j - 1);
    };
    Poly f = c(i) * c(i);
    for (int k = 1; k <= i; ++k) {
        Poly t = (c(i - k) * c(i + k)).scaled(2);
        if (k % 2) f -= t;
        else f += t;
    }
    return f;
}

namespace {

void check_elementary_pair(const Ring& z, const Ring& e) {
    if (z->nvars() != e->nvars() || z->p != e->p)
        throw Error(ErrorKind::RingMismatch, z->name + " and " + e->name + " differ in size or prime");
    for (int i = 0; i < z->nvars(); ++i)
        if (z->degrees[i] != z->degrees[0] || e->degrees[i] != (i + 1) * z->degrees[0])
            throw Error(ErrorKind::RingMismatch, e->name + " is not the elementary ring of " + z->name);
}

// Products of elementary polynomials, cached by exponent.
class ElementaryPowers {
public:
    explicit ElementaryPowers(const Ring& z) : z_(z) {
        std::vector<Poly> vals;
        for (int i = 0; i < z->nvars(); ++i) vals.push_back(Poly::var(z, i));
        el_ = elementary_of(vals, z->nvars());
        pw_.resize(z->nvars() + 1);
    }
    const Poly& power(int i, int k) {
        auto& v = pw_[i];
        if (v.empty()) v.push_back(Poly::constant(z_, 1));
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * el_[i]);
        return v[k];
    }
    Poly product(Mono ex) {
        Poly acc = Poly::constant(z_, 1);
        for (int i = 0; i < z_->nvars(); ++i)
            if (ex[i]) acc = acc * power(i + 1, ex[i]);
        return acc;
    }

private:
    Ring z_;
    std::vector<Poly> el_;
    std::vector<std::vector<Poly>> pw_;
};

}  // namespace

Poly to_elementary_basis(const Poly& f, const Ring& e_ring) {
    const Ring& z = f.ring();
    check_elementary_pair(z, e_ring);
    const int n = z->nvars();
    ElementaryPowers ep(z);
    PolyBuilder out(e_ring);
    Poly rest = f;
    while (!rest.is_zero()) {
        // The front term is the lex-largest of top degree.
        Term lead = rest.terms().front();
        Mono ex;
        for (int i = 0; i < n; ++i) {
            int next = i + 1 < n ? lead.mono[i + 1] : 0;
            if (lead.mono[i] < next)
                throw Error(ErrorKind::NotSymmetric, "leading exponent vector is not a partition");
            ex = ex.with(i, lead.mono[i] - next);
        }
        rest -= ep.product(ex).scaled(lead.coeff);
        out.add(ex, lead.coeff);
    }
    return std::move(out).build();
}

Poly from_elementary_basis(const Poly& g, const Ring& z_ring) {
    check_elementary_pair(z_ring, g.ring());
    ElementaryPowers ep(z_ring);
    PolyBuilder out(z_ring);
    for (const auto& t : g.terms()) out.add(ep.product(t.mono), t.coeff);
    return std::move(out).build();
}

Poly power_sum_in_p(int k, const Ring& pont) {
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "power sum index " + std::to_string(k));
    const int m = pont->nvars();
    // s_j = sum_{i<j} (-1)^(i-1) e_i s_{j-i} + (-1)^(j-1) j e_j
    std::vector<Poly> s(k + 1, Poly(pont));
    for (int j = 1; j <= k; ++j) {
        Poly acc(pont);
        for (int i = 1; i < j && i <= m; ++i) {
            Poly t = Poly::var(pont, i - 1) * s[j - i];
            if (i % 2) acc += t;
            else acc -= t;
        }
        if (j <= m) {
            Poly t = Poly::var(pont, j - 1).scaled(static_cast<u32>(j % pont->p));
            if (j % 2) acc += t;
            else acc -= t;
        }
        s[j] = std::move(acc);
    }
    return s[k];
}

SpinRing::SpinRing(int m, u32 p) : m_(m), p_(p) {
    if (m < 2 || m > Mono::kMaxVars) throw Error(ErrorKind::IndexOutOfRange, "half-rank " + std::to_string(m));
    std::vector<std::string> fv, pv;
    std::vector<int> fd, pd;
    for (int i = 1; i < m; ++i) {
        fv.push_back("p" + std::to_string(i));
        fd.push_back(4 * i);
    }
    pv = fv;
    pd = fd;
    fv.push_back("e" + std::to_string(m));
    fd.push_back(2 * m);
    pv.push_back("p" + std::to_string(m));
    pd.push_back(4 * m);
    const std::string tag = "spin" + std::to_string(2 * m);
    free_ = make_ring(tag, fv, fd, p, true, true);
    pont_ = make_ring(tag + "-pont", pv, pd, p, true, true);
    std::vector<std::string> zv;
    for (int i = 1; i <= m; ++i) zv.push_back("z" + std::to_string(i));
    z_ = make_ring(tag + "-z", zv, std::vector<int>(m, 4), p);
    std::vector<Poly> vals;
    for (int i = 0; i < m; ++i) vals.push_back(Poly::var(z_, i));
    zel_ = elementary_of(vals, m);
}

Poly SpinRing::pont_to_free(const Poly& f) const {
    require_same_ring(f.ring(), pont_);
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({t.mono.with(m_ - 1, 2 * t.mono[m_ - 1]), t.coeff});
    return Poly::from_terms(free_, std::move(out));
}

std::shared_ptr<const SpinRing> spin_ring(int m, u32 p) {
    static std::mutex mu;
    static std::map<std::pair<int, u32>, std::shared_ptr<const SpinRing>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, p}];
    if (!slot) slot = std::make_shared<const SpinRing>(m, p);
    return slot;
}

SpinElement to_zform(const Poly& f, const std::shared_ptr<const SpinRing>& ring) {
    require_same_ring(f.ring(), ring->free_ring());
    const int m = ring->m();
    const Ring& z = ring->z_ring();
    const auto& el = ring->z_elementary();
    SpinElement x{ring, Poly(z), Poly(z)};
    for (const auto& t : f.terms()) {
        Poly acc = Poly::constant(z, t.coeff);
        for (int i = 0; i < m - 1; ++i)
            if (t.mono[i]) acc = acc * el[i + 1].pow(t.mono[i]);
        int e = t.mono[m - 1];
        if (e >= 2) acc = acc * el[m].pow(e / 2);
        (e % 2 ? x.odd : x.even) += acc;
    }
    return x;
}

Poly from_zform(const SpinElement& x) {
    const auto& r = *x.ring;
    Poly a = r.pont_to_free(to_elementary_basis(x.even, r.pont_ring()));
    Poly b = r.pont_to_free(to_elementary_basis(x.odd, r.pont_ring()));
    return a + b * Poly::var(r.free_ring(), r.euler_index());
}

SpinElement spin_mul(const SpinElement& a, const SpinElement& b) {
    if (a.ring != b.ring && !(a.ring->m() == b.ring->m() && a.ring->p() == b.ring->p()))
        throw Error(ErrorKind::RingMismatch, "spin elements over different rings");
    const Poly& zm = a.ring->z_elementary()[a.ring->m()];
    return {a.ring, a.even * b.even + a.odd * b.odd * zm, a.even * b.odd + a.odd * b.even};
}

}  // namespace stpow
