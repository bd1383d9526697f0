#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stpow/idealred.hpp"

namespace stpow {

// A generator of H*(BG) through its image in a Spin free ring. The image is
// known only modulo `modulo`; `ambiguity` spans everything it could differ by
// in its degree.
struct NamedClass {
    std::string name;
    int degree = 0;
    Poly representative;
    std::optional<IdealSpec> modulo;
    std::vector<Poly> ambiguity;
};

// An ordered generating set in one Spin ring, e.g. x4..x60 for E8.
struct ClassFamily {
    std::string name;
    std::shared_ptr<const SpinRing> spin;
    std::vector<NamedClass> classes;

    u32 p() const { return spin->p(); }
    const Ring& ring() const { return spin->free_ring(); }
    std::size_t index_of(std::string_view name) const;
    const NamedClass& at(std::string_view name) const { return classes[index_of(name)]; }
    // Polynomial ring on the class names, graded by class degree.
    Ring class_ring() const;
};

// Adds a class, checking the degree and that the representative is reduced.
// An ideal given without an explicit ambiguity contributes its degree slice.
void add_class(ClassFamily& fam, std::string name, int degree, Poly rep, std::optional<IdealSpec> modulo = {},
               std::optional<std::vector<Poly>> ambiguity = {});

ClassFamily e8_x_family();            // x4..x60 at p = 7
ClassFamily e8_y_family();            // y-generators, P^1-chained from y24
ClassFamily e7_x_family(u32 p);       // x4..x36 with j*(x_i) = xbar_i
ClassFamily e7_y_family();            // y-generators at p = 7, chained from y12

// theta(source) contains coefficient * term, where term is a monomial in the
// family's classes given as (name, power) pairs.
struct DecompositionClaim {
    std::string source;
    int iterate = 1;
    std::vector<std::pair<std::string, int>> term;
    i64 claimed = 0;
    bool asserted = true;  // false: the value is computed and reported only
};

enum class CheckStatus { Pass, Fail, Ambiguous };
const char* to_string(CheckStatus s) noexcept;

struct CoefficientEntry {
    // Residues print in signed form; counts and yes/no flags as they are.
    enum class Kind { Residue, Count, Flag };
    std::string label;
    Kind kind = Kind::Residue;
    u32 value = 0;          // mod p for residues
    std::optional<u32> claimed;
    bool determined = true;
    bool asserted = true;
    bool require_nonzero = false;  // with no claimed value: P > M only
    bool ok() const {
        if (!determined) return false;
        return claimed ? value == *claimed : !require_nonzero || value != 0;
    }
};

struct StabilityEntry {
    std::string ideal;
    std::string op;
    std::size_t ambiguity_size = 0;
    std::vector<std::string> hit_targets;
    bool pass = true;
};

struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    u32 p = 0;
    std::vector<CoefficientEntry> coefficients;
    std::vector<std::string> witnesses;
    std::vector<StabilityEntry> stability;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    // Folds every asserted coefficient and stability entry into the status.
    void settle();
    nlohmann::json to_json() const;
    std::string line() const;
};

struct MatchOptions {
    IdealSpec working;
    std::string label;  // prefix for coefficient labels
};

// Expresses NF(theta(source)) as a combination of products of the family's
// representatives, using only the monomials that no ambiguity can reach, and
// reads off the claimed coefficients. Unreached claims are AMBIGUOUS.
CheckReport match_decomposition(const ClassFamily& fam, const std::vector<DecompositionClaim>& claims,
                                const MatchOptions& opt);

// Degree identity deg(source) + 2k(p-1) = deg(term); throws DerivationDegreeError.
void check_degrees(const ClassFamily& fam, const DecompositionClaim& claim);

// Monomial-by-monomial comparison of two normal forms modulo an ideal.
struct DisplayComparison {
    std::vector<std::string> mismatches;
    std::vector<std::string> missing;  // displayed, computed coefficient 0
    std::vector<std::string> extra;    // computed, not displayed
    bool equal() const { return mismatches.empty() && missing.empty() && extra.empty(); }
};
DisplayComparison compare_display(const Poly& computed, const Poly& displayed, const IdealSpec& ideal);

const std::vector<std::string>& check_ids();
CheckReport check(const std::string& id);
// Every id starting with the prefix; throws UnknownCheck when none does.
std::vector<std::string> select_checks(const std::string& prefix);

}  // namespace stpow
