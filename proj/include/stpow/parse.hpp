#pragma once

#include <map>
#include <string>
#include <string_view>

#include "stpow/poly.hpp"

namespace stpow {

// Names that are not ring variables but stand for fixed polynomials of the
// ring, such as c6 or q1 over the t-variables.
using SymbolTable = std::map<std::string, Poly, std::less<>>;

// Grammar: sums of terms; a term is a product of factors joined by '*',
// juxtaposition or '/ integer'; a factor is an integer, an identifier or a
// parenthesized sum, optionally raised to '^ integer'.
Poly parse_poly(std::string_view text, const Ring& ring, const SymbolTable& symbols = {});

std::string mono_to_string(const RingSpec& ring, Mono m);
// Signed form prints 5 mod 7 as -2.
std::string to_string(const Poly& f, bool signed_form = true);

}  // namespace stpow
