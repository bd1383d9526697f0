#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stpow/paperchecks.hpp"

namespace stpow {

// P^1 on one exterior generator of a summand: zero, or the generator
// 2(p-1) degrees higher. Generators without a fact are unconstrained.
struct P1Fact {
    enum class Kind { Zero, Chain };
    int generator = 0;  // degree
    Kind kind = Kind::Zero;
    std::string citation;
};

// A factor B(n_1,...,n_r) of the mod p decomposition, or a sphere.
struct CWSummand {
    std::string name;
    std::vector<int> degrees;
    std::vector<P1Fact> p1_facts;

    const P1Fact* fact_for(int degree) const;
};

struct PullbackFact {
    std::string summand;
    std::string generator;  // e.g. "x28", "y12"
    std::string citation;
};

struct HomotopyFact {
    int degree = 0;  // pi_degree(G)_(p) = 0
    std::string citation;
};

// P^1 from = to among the polynomial generators of H*(BG).
struct ChainFact {
    std::string from, to;
    std::string citation;
};

// A subcomplex of a summand, with cells in the given dimensions, whose
// suspension is a retract compatible with the map to BG.
struct RetractFact {
    std::string summand;
    std::vector<int> cells;
    std::string citation;
};

struct FactBase {
    std::string group;  // "E7", "E8"
    u32 p = 0;
    std::map<std::string, int> generators;  // name -> degree
    std::vector<CWSummand> summands;
    std::vector<PullbackFact> pullbacks;
    std::vector<HomotopyFact> homotopy_vanishing;
    std::vector<ChainFact> chains;
    std::optional<RetractFact> retract;

    static FactBase from_json(const nlohmann::json& j);
    static FactBase load(const std::string& path);
    nlohmann::json to_json() const;
    // Throws FactBaseError on inconsistent degrees or missing citations.
    void validate() const;

    const CWSummand& summand(std::string_view name) const;
    int degree_of(std::string_view generator) const;
    const PullbackFact* pullback(std::string_view summand, std::string_view generator) const;
    const ChainFact* chain_from(std::string_view generator) const;
    const HomotopyFact* vanishing(int degree) const;
};

// A = summand^(top): the cells of dimension <= top.
struct Skeleton {
    std::string summand;
    int top = 0;
};

struct CriterionInstance {
    enum class Pattern { DegreeVanishing, ForcedPrimitive };
    std::string pairing;  // "<eps1,eps2>"
    std::string name;     // the restricted maps, e.g. "<eps1|B1^(27), eps2|S^23>"
    std::string xi, xj, xk;
    int iterate = 1;  // theta = (P^1)^iterate
    Skeleton a, b;
    Pattern pattern = Pattern::DegreeVanishing;
    std::string chain_base;  // ForcedPrimitive: the generator whose pullback is forced
    std::string coefficient_check;
    std::string coefficient_label;
};

struct Condition4Result {
    bool discharged = false;
    std::vector<std::string> trail;
    std::vector<std::string> surviving;
};

struct Verdict {
    enum class Kind { ProvenNontrivial, CertifiedTrivial, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;  // for Inconclusive: the first condition that failed
    std::vector<std::string> evidence;
    std::vector<int> dimensions;  // Certified-Trivial: smash cell dimensions

    nlohmann::json to_json() const;
};
const char* to_string(Verdict::Kind k) noexcept;

std::vector<int> smash_cell_dims(const std::vector<int>& a, const std::vector<int>& b);

// Degrees of the nonzero classes of H~*(summand^(top)): exterior monomials on
// the generators, dropped above top.
std::vector<int> skeleton_class_degrees(const CWSummand& s, int top);
int skeleton_dim(const CWSummand& s, int top);

Condition4Result check_condition4(const CriterionInstance& inst, const FactBase& facts);

// Looks up a computed coefficient: (check id, label) -> entry.
using CoefficientLookup =
    std::function<std::optional<CoefficientEntry>(const std::string& check_id, const std::string& label)>;
// Runs the registered check once per id and keeps the report.
CoefficientLookup paperchecks_lookup();

Verdict check_criterion(const CriterionInstance& inst, const FactBase& facts,
                        const CoefficientLookup& lookup = paperchecks_lookup());
Verdict certify_trivial_e8(const FactBase& facts);

struct PairingResult {
    std::string pairing;
    std::string instance;
    Verdict verdict;
};

// The instances for the fact base's group and prime.
std::vector<CriterionInstance> default_instances(const FactBase& facts);
std::vector<PairingResult> run_suite(const FactBase& facts, const CoefficientLookup& lookup = paperchecks_lookup());

}  // namespace stpow
