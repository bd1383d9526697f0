#include "stpow/ring.hpp"

#include <algorithm>
#include <set>

namespace stpow {

int RingSpec::var_index(std::string_view n) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[i] == n) return i;
    return -1;
}

int RingSpec::degree(Mono m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += m[i] * degrees[i];
    return d;
}

Ring make_ring(std::string name, std::vector<std::string> vars, std::vector<int> degrees, u32 p, bool free,
               bool display_high_first) {
    if (vars.size() != degrees.size() || vars.empty() || vars.size() > Mono::kMaxVars)
        throw Error(ErrorKind::IndexOutOfRange, "ring " + name + " needs 1.." + std::to_string(Mono::kMaxVars) +
                                                    " variables with one degree each");
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!seen.insert(vars[i]).second) throw Error(ErrorKind::UnknownName, "duplicate variable " + vars[i]);
        if (degrees[i] <= 0 || degrees[i] % 2)
            throw Error(ErrorKind::IndexOutOfRange, "variable " + vars[i] + " must have positive even degree");
    }
    auto r = std::make_shared<RingSpec>();
    r->name = std::move(name);
    r->vars = std::move(vars);
    r->degrees = std::move(degrees);
    r->p = p;
    r->free = free;
    r->display_high_first = display_high_first;
    return r;
}

Ring make_uniform_ring(std::string name, const std::string& prefix, int n, int degree, u32 p) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return make_ring(std::move(name), std::move(v), std::vector<int>(n, degree), p);
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b))
        throw Error(ErrorKind::RingMismatch, (a ? a->name : "?") + " vs " + (b ? b->name : "?"));
}

std::vector<Mono> monomials_of_degree(const RingSpec& ring, int degree) {
    std::vector<Mono> out;
    const int n = ring.nvars();
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n) {
            if (rem == 0) out.push_back(Mono::from_exponents(e.begin(), e.end()));
            return;
        }
        for (int k = 0; k * ring.degrees[i] <= rem && k <= Mono::kMaxExp; ++k) {
            e[i] = k;
            self(self, i + 1, rem - k * ring.degrees[i]);
        }
        e[i] = 0;
    };
    if (degree >= 0) rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stpow
