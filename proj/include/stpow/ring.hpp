#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stpow/mono.hpp"
#include "stpow/zp.hpp"

namespace stpow {

struct RingSpec {
    std::string name;
    std::vector<std::string> vars;
    std::vector<int> degrees;  // topological, even and positive
    u32 p = 0;
    // False for presentation rings whose generators satisfy relations once expanded
    // (the c_i in seven t-variables, say); augmentation filters are refused there.
    bool free = true;
    // Print p7*p6 rather than p6*p7, and order terms from the last variable.
    bool display_high_first = false;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(std::string_view name) const;
    int degree(Mono m) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.name == b.name && a.vars == b.vars && a.degrees == b.degrees && a.p == b.p;
    }
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::string name, std::vector<std::string> vars, std::vector<int> degrees, u32 p,
               bool free = true, bool display_high_first = false);
// Names x1..xn (or the given prefix), all of one degree.
Ring make_uniform_ring(std::string name, const std::string& prefix, int n, int degree, u32 p);

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

// Every monomial of the given topological degree, in increasing packed order.
std::vector<Mono> monomials_of_degree(const RingSpec& ring, int degree);

}  // namespace stpow
