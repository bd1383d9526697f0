#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stpow/ring.hpp"

namespace stpow {

struct Term {
    Mono mono;
    u32 coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

// Returns true for monomials to keep. Used to multiply inside a quotient by a
// monomial ideal without materializing the discarded terms.
using MonoFilter = std::function<bool(Mono)>;

// Sparse polynomial over Z/p. Terms are kept sorted by descending
// (topological degree, packed exponent) with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly constant(Ring ring, i64 c);
    static Poly var(Ring ring, int i);
    static Poly monomial(Ring ring, Mono m, u32 c = 1);
    static Poly from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    u32 p() const { return ring_->p; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of the leading term, -1 for the zero polynomial.
    int degree() const;
    u32 coeff(Mono m) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    Poly scaled(u32 c) const;
    Poly scaled(Coeff c) const;
    Poly times_mono(Mono m, u32 c = 1) const;
    Poly pow(unsigned k, const MonoFilter& keep = {}) const;
    Poly filtered(const MonoFilter& keep) const;

private:
    void normalize();
    Ring ring_;
    std::vector<Term> terms_;
};

Poly mul(const Poly& a, const Poly& b, const MonoFilter& keep = {});
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Coeff c);

Coeff coefficient_of(const Poly& f, Mono m);

// Accumulates terms into a map; faster than repeated Poly additions in loops.
class PolyBuilder {
public:
    explicit PolyBuilder(Ring ring);
    void add(Mono m, u32 c);
    void add(const Poly& f, u32 scale = 1);
    void add_product(const Poly& f, Mono m, u32 c);
    Poly build() &&;

private:
    struct Impl;
    Ring ring_;
    std::shared_ptr<Impl> impl_;
};

// A ring map given by the image of each source variable. Called a linear
// substitution when every image is homogeneous of its variable's degree.
struct LinearSubstitution {
    Ring source;
    Ring target;
    std::vector<std::optional<Poly>> images;
    bool involution = false;

    static LinearSubstitution identity(const Ring& r);
    bool is_degree_preserving() const;
};

Poly apply_substitution(const Poly& f, const LinearSubstitution& s, const MonoFilter& keep = {});
// The derivation sending variable i to images[i]; images live in f's ring.
Poly apply_derivation(const Poly& f, const std::vector<Poly>& images);

}  // namespace stpow
