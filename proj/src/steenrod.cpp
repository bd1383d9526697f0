#include "stpow/steenrod.hpp"

#include <map>
#include <mutex>

namespace stpow {

Poly p1_on_t_ring(const Poly& f) {
    const Ring& r = f.ring();
    std::vector<Poly> images;
    for (int i = 0; i < r->nvars(); ++i) {
        if (r->degrees[i] != 2)
            throw Error(ErrorKind::DerivationDegreeError, "variable " + r->vars[i] + " is not of degree 2");
        images.push_back(Poly::monomial(r, Mono::var(i, static_cast<int>(r->p))));
    }
    return apply_derivation(f, images);
}

namespace {

u32 factorial_mod(int n, u32 p) {
    u32 f = 1;
    for (int i = 2; i <= n; ++i) f = mul_mod(f, static_cast<u32>(i % p), p);
    return f;
}

}  // namespace

// Coefficient rule, resolved against wu_oracle for every n <= m <= 8 and p in {5, 7}:
//  - tuples with some i_j >= p are dropped (their factorial denominator vanishes mod p);
//  - for a single index (sum i_j = 1) the bracket reads 2n + p - 1 in place of the
//    undefined quotient;
//  - otherwise (s-1)!/prod(i_j!) * (2n - 1 - X/(s-1)), X = sum_{j<n} (2n+p-1-2j) i_j,
//    evaluated as ((s-1)!(2n-1) - (s-2)! X) / prod(i_j!).
// All terms carry the sign (-1)^(s + (p+1)/2), s = sum i_j.
Poly p1_wu(int n, int m, u32 p) {
    if (n < 1 || n > m) throw Error(ErrorKind::IndexOutOfRange, "P^1 p_n needs 1 <= n <= m");
    const Ring& pont = spin_ring(m, p)->pont_ring();
    const int target = n + static_cast<int>(p - 1) / 2;
    PolyBuilder out(pont);
    std::vector<int> idx(m + 1, 0);
    auto emit = [&]() {
        int s = 0;
        for (int j = 1; j <= m; ++j) {
            if (idx[j] >= static_cast<int>(p)) return;
            s += idx[j];
        }
        i64 val;
        if (s == 1) {
            val = 2 * n + static_cast<i64>(p) - 1;
        } else {
            i64 x = 0;
            for (int j = 1; j <= std::min(n - 1, m); ++j) x += (2 * n + static_cast<i64>(p) - 1 - 2 * j) * idx[j];
            u32 num = sub_mod(mul_mod(factorial_mod(s - 1, p), residue(2 * n - 1, p), p),
                              mul_mod(factorial_mod(s - 2, p), residue(x, p), p), p);
            u32 den = 1;
            for (int j = 1; j <= m; ++j) den = mul_mod(den, factorial_mod(idx[j], p), p);
            val = mul_mod(num, inv_mod(den, p), p);
        }
        if ((s + static_cast<int>(p + 1) / 2) % 2) val = -val;
        Mono mono;
        for (int j = 1; j <= m; ++j) mono = mono.with(j - 1, idx[j]);
        out.add(mono, residue(val, p));
    };
    auto rec = [&](auto&& self, int j, int rem) -> void {
        if (j > m) {
            if (rem == 0) emit();
            return;
        }
        for (int i = 0; i * j <= rem; ++i) {
            idx[j] = i;
            self(self, j + 1, rem - i * j);
        }
        idx[j] = 0;
    };
    rec(rec, 1, target);
    return std::move(out).build();
}

Poly wu_oracle(int n, int m, u32 p) {
    if (n < 1 || n > m) throw Error(ErrorKind::IndexOutOfRange, "P^1 p_n needs 1 <= n <= m");
    auto sr = spin_ring(m, p);
    Ring t = make_uniform_ring("t" + std::to_string(m), "t", m, 2, p);
    std::vector<Poly> squares;
    for (int i = 0; i < m; ++i) squares.push_back(Poly::monomial(t, Mono::var(i, 2)));
    Poly pn = elementary_of(squares, n)[n];
    Poly d = p1_on_t_ring(pn);
    std::vector<Term> halved;
    for (const auto& term : d.terms()) {
        Mono z;
        for (int i = 0; i < m; ++i) {
            if (term.mono[i] % 2) throw Error(ErrorKind::NotSymmetric, "odd exponent in P^1 p_n");
            z = z.with(i, term.mono[i] / 2);
        }
        halved.push_back({z, term.coeff});
    }
    return to_elementary_basis(Poly::from_terms(sr->z_ring(), std::move(halved)), sr->pont_ring());
}

Poly p1_euler(int m, u32 p) {
    auto sr = spin_ring(m, p);
    Poly sum = sr->pont_to_free(power_sum_in_p(static_cast<int>(p - 1) / 2, sr->pont_ring()));
    return sum * Poly::var(sr->free_ring(), sr->euler_index());
}

namespace {

const std::vector<Poly>& generator_images(const SpinRing& ring) {
    static std::mutex mu;
    static std::map<std::pair<int, u32>, std::vector<Poly>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{ring.m(), ring.p()}];
    if (slot.empty()) {
        for (int n = 1; n < ring.m(); ++n) slot.push_back(ring.pont_to_free(p1_wu(n, ring.m(), ring.p())));
        slot.push_back(p1_euler(ring.m(), ring.p()));
    }
    return slot;
}

std::shared_ptr<const SpinRing> spin_of(const Ring& r) {
    const int m = r->nvars();
    auto sr = spin_ring(m, r->p);
    require_same_ring(r, sr->free_ring());
    return sr;
}

}  // namespace

Poly p1_spin(const Poly& f, const SpinRing& ring) {
    require_same_ring(f.ring(), ring.free_ring());
    return apply_derivation(f, generator_images(ring));
}

Poly p1_spin(const Poly& f) { return p1_spin(f, *spin_of(f.ring())); }

SpinElement p1_spin(const SpinElement& x) { return to_zform(p1_spin(from_zform(x), *x.ring), x.ring); }

SpinElement p1_zform(const SpinElement& x) {
    const Ring& z = x.ring->z_ring();
    const u32 p = x.ring->p();
    const int r = static_cast<int>(p - 1) / 2;
    std::vector<Poly> images;
    Poly sr(z);
    for (int i = 0; i < z->nvars(); ++i) {
        images.push_back(Poly::monomial(z, Mono::var(i, r + 1), 2));
        sr += Poly::monomial(z, Mono::var(i, r));
    }
    return {x.ring, apply_derivation(x.even, images), apply_derivation(x.odd, images) + x.odd * sr};
}

Poly apply_op(const SteenrodOp& op, const Poly& f) {
    auto sr = spin_of(f.ring());
    if (op.p != sr->p()) throw Error(ErrorKind::RingMismatch, "operation prime differs from ring prime");
    Poly g = f;
    for (int i = 0; i < op.iterate; ++i) g = p1_spin(g, *sr);
    return g;
}

}  // namespace stpow
