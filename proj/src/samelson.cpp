#include "stpow/samelson.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace stpow {

const P1Fact* CWSummand::fact_for(int degree) const {
    for (const auto& f : p1_facts)
        if (f.generator == degree) return &f;
    return nullptr;
}

// ---- fact base ----

namespace {

[[noreturn]] void fact_error(const std::string& what) { throw Error(ErrorKind::FactBaseError, what); }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

}  // namespace

FactBase FactBase::from_json(const nlohmann::json& j) {
    FactBase fb;
    try {
        fb.group = j.at("group").get<std::string>();
        fb.p = j.at("prime").get<u32>();
        const auto& t = j.at("target");
        for (const auto& [name, deg] : t.at("generators").items()) fb.generators[name] = deg.get<int>();
        if (t.contains("chains"))
            for (const auto& c : t.at("chains"))
                fb.chains.push_back({c.at("from"), c.at("to"), c.value("citation", "")});
        for (const auto& s : j.at("summands")) {
            CWSummand cw{s.at("name"), s.at("degrees").get<std::vector<int>>(), {}};
            if (s.contains("p1_facts"))
                for (const auto& f : s.at("p1_facts")) {
                    std::string kind = f.at("kind");
                    if (kind != "zero" && kind != "chain") fact_error("unknown P1 fact kind " + kind);
                    cw.p1_facts.push_back({f.at("generator").get<int>(),
                                           kind == "zero" ? P1Fact::Kind::Zero : P1Fact::Kind::Chain,
                                           f.value("citation", "")});
                }
            fb.summands.push_back(std::move(cw));
        }
        if (j.contains("pullbacks"))
            for (const auto& pb : j.at("pullbacks"))
                fb.pullbacks.push_back({pb.at("summand"), pb.at("generator"), pb.value("citation", "")});
        if (j.contains("homotopy_vanishing"))
            for (const auto& h : j.at("homotopy_vanishing"))
                fb.homotopy_vanishing.push_back({h.at("degree").get<int>(), h.value("citation", "")});
        if (j.contains("retract")) {
            const auto& r = j.at("retract");
            fb.retract = RetractFact{r.at("summand"), r.at("cells").get<std::vector<int>>(), r.value("citation", "")};
        }
    } catch (const nlohmann::json::exception& e) {
        fact_error(e.what());
    }
    fb.validate();
    return fb;
}

FactBase FactBase::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fact_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fact_error(path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json FactBase::to_json() const {
    using nlohmann::json;
    json j{{"group", group}, {"prime", p}};
    json gens = json::object();
    for (const auto& [n, d] : generators) gens[n] = d;
    json chains_j = json::array();
    for (const auto& c : chains) chains_j.push_back({{"from", c.from}, {"to", c.to}, {"citation", c.citation}});
    j["target"] = {{"generators", gens}, {"chains", chains_j}};
    json sj = json::array();
    for (const auto& s : summands) {
        json facts = json::array();
        for (const auto& f : s.p1_facts)
            facts.push_back({{"generator", f.generator},
                             {"kind", f.kind == P1Fact::Kind::Zero ? "zero" : "chain"},
                             {"citation", f.citation}});
        sj.push_back({{"name", s.name}, {"degrees", s.degrees}, {"p1_facts", facts}});
    }
    j["summands"] = sj;
    json pj = json::array();
    for (const auto& pb : pullbacks)
        pj.push_back({{"summand", pb.summand}, {"generator", pb.generator}, {"citation", pb.citation}});
    j["pullbacks"] = pj;
    json hj = json::array();
    for (const auto& h : homotopy_vanishing) hj.push_back({{"degree", h.degree}, {"citation", h.citation}});
    j["homotopy_vanishing"] = hj;
    if (retract)
        j["retract"] = {{"summand", retract->summand}, {"cells", retract->cells}, {"citation", retract->citation}};
    return j;
}

void FactBase::validate() const {
    if (p != 5 && p != 7) fact_error("prime must be 5 or 7");
    const int shift = 2 * static_cast<int>(p - 1);
    for (const auto& [n, d] : generators)
        if (d <= 0 || d % 2) fact_error("generator " + n + " has degree " + std::to_string(d));
    std::set<std::string> names;
    for (const auto& s : summands) {
        if (!names.insert(s.name).second) fact_error("summand " + s.name + " listed twice");
        if (s.degrees.empty()) fact_error(s.name + " has no generators");
        for (std::size_t i = 0; i < s.degrees.size(); ++i) {
            if (s.degrees[i] <= 0 || s.degrees[i] % 2 == 0) fact_error(s.name + ": generator degrees must be odd");
            if (i && s.degrees[i] <= s.degrees[i - 1]) fact_error(s.name + ": degrees must increase");
        }
        for (const auto& f : s.p1_facts) {
            if (f.citation.empty()) fact_error(s.name + ": P1 fact without citation");
            if (std::find(s.degrees.begin(), s.degrees.end(), f.generator) == s.degrees.end())
                fact_error(s.name + ": P1 fact on missing generator " + std::to_string(f.generator));
            if (f.kind == P1Fact::Kind::Chain &&
                std::find(s.degrees.begin(), s.degrees.end(), f.generator + shift) == s.degrees.end())
                fact_error(s.name + ": chain from degree " + std::to_string(f.generator) + " needs a generator in degree " +
                           std::to_string(f.generator + shift));
        }
    }
    for (const auto& pb : pullbacks) {
        if (pb.citation.empty()) fact_error("pullback fact without citation");
        if (!names.count(pb.summand)) fact_error("pullback names unknown summand " + pb.summand);
        if (!generators.count(pb.generator)) fact_error("pullback names unknown generator " + pb.generator);
    }
    for (const auto& c : chains) {
        if (c.citation.empty()) fact_error("chain fact without citation");
        if (!generators.count(c.from) || !generators.count(c.to)) fact_error("chain names unknown generator");
        if (generators.at(c.to) != generators.at(c.from) + shift)
            fact_error("chain " + c.from + " -> " + c.to + " does not shift degree by " + std::to_string(shift));
    }
    for (const auto& h : homotopy_vanishing)
        if (h.citation.empty()) fact_error("homotopy fact without citation");
    if (retract) {
        if (retract->citation.empty()) fact_error("retract fact without citation");
        if (!names.count(retract->summand)) fact_error("retract names unknown summand " + retract->summand);
        if (retract->cells.empty()) fact_error("retract with no cells");
    }
}

const CWSummand& FactBase::summand(std::string_view name) const {
    for (const auto& s : summands)
        if (s.name == name) return s;
    fact_error("no summand " + std::string(name));
}

int FactBase::degree_of(std::string_view generator) const {
    auto it = generators.find(std::string(generator));
    if (it == generators.end()) fact_error("no generator " + std::string(generator));
    return it->second;
}

const PullbackFact* FactBase::pullback(std::string_view s, std::string_view g) const {
    for (const auto& pb : pullbacks)
        if (pb.summand == s && pb.generator == g) return &pb;
    return nullptr;
}

const ChainFact* FactBase::chain_from(std::string_view g) const {
    for (const auto& c : chains)
        if (c.from == g) return &c;
    return nullptr;
}

const HomotopyFact* FactBase::vanishing(int degree) const {
    for (const auto& h : homotopy_vanishing)
        if (h.degree == degree) return &h;
    return nullptr;
}

// ---- cell and cohomology arithmetic ----

std::vector<int> smash_cell_dims(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> out;
    for (int x : a)
        for (int y : b) out.insert(x + y);
    return {out.begin(), out.end()};
}

namespace {

// H~*(summand^(top)) as exterior monomials (bit masks over generators).
class Exterior {
public:
    Exterior(const CWSummand& s, int top, u32 p, std::string label)
        : s_(s), top_(top), shift_(2 * static_cast<int>(p - 1)), label_(std::move(label)) {}

    int degree(std::uint32_t m) const {
        int d = 0;
        for (std::size_t i = 0; i < s_.degrees.size(); ++i)
            if (m >> i & 1) d += s_.degrees[i];
        return d;
    }
    std::vector<std::uint32_t> classes_of_degree(int d) const {
        std::vector<std::uint32_t> out;
        if (d > top_) return out;
        for (std::uint32_t m = 1; m < (1u << s_.degrees.size()); ++m)
            if (degree(m) == d) out.push_back(m);
        return out;
    }
    std::vector<int> class_degrees() const {
        std::vector<int> out;
        for (std::uint32_t m = 1; m < (1u << s_.degrees.size()); ++m)
            if (degree(m) <= top_) out.push_back(degree(m));
        std::sort(out.begin(), out.end());
        return out;
    }
    std::string name(std::uint32_t m) const {
        std::string s;
        for (std::size_t i = 0; i < s_.degrees.size(); ++i)
            if (m >> i & 1) s += "z" + std::to_string(s_.degrees[i]);
        return s;
    }

    // Every class P^1 of the generator might be, recording the facts used.
    std::vector<std::uint32_t> p1_generator(std::size_t i, std::set<std::string>& used) const {
        int d = s_.degrees[i] + shift_;
        if (d > top_) return {};
        if (const P1Fact* f = s_.fact_for(s_.degrees[i])) {
            used.insert(label_ + ": P1 z" + std::to_string(s_.degrees[i]) +
                        (f->kind == P1Fact::Kind::Zero ? " = 0" : " = z" + std::to_string(d)) + " [" + f->citation +
                        "]");
            if (f->kind == P1Fact::Kind::Zero) return {};
            for (std::size_t j = 0; j < s_.degrees.size(); ++j)
                if (s_.degrees[j] == d) return {1u << j};
            return {};
        }
        return classes_of_degree(d);
    }
    // Cartan formula; products vanish on repeated generators and above top.
    std::set<std::uint32_t> p1(std::uint32_t m, std::set<std::string>& used) const {
        std::set<std::uint32_t> out;
        for (std::size_t i = 0; i < s_.degrees.size(); ++i) {
            if (!(m >> i & 1)) continue;
            std::uint32_t rest = m & ~(1u << i);
            for (std::uint32_t c : p1_generator(i, used))
                if (!(c & rest) && degree(c | rest) <= top_) out.insert(c | rest);
        }
        return out;
    }

private:
    const CWSummand& s_;
    int top_;
    int shift_;
    std::string label_;
};

// Basis classes of H~*(Sigma A x Sigma B).
struct Cls {
    int side;  // 0: Sigma a x 1, 1: 1 x Sigma b, 2: Sigma a x Sigma b
    std::uint32_t a, b;
    auto operator<=>(const Cls&) const = default;
};

class Product {
public:
    Product(const Exterior& A, const Exterior& B) : A_(A), B_(B) {}

    int degree(const Cls& c) const {
        switch (c.side) {
            case 0: return A_.degree(c.a) + 1;
            case 1: return B_.degree(c.b) + 1;
            default: return A_.degree(c.a) + B_.degree(c.b) + 2;
        }
    }
    std::set<Cls> basis(int d) const {
        std::set<Cls> out;
        for (auto a : A_.classes_of_degree(d - 1)) out.insert({0, a, 0});
        for (auto b : B_.classes_of_degree(d - 1)) out.insert({1, 0, b});
        for (int da = 1; da <= d - 3; ++da)
            for (auto a : A_.classes_of_degree(da))
                for (auto b : B_.classes_of_degree(d - 2 - da)) out.insert({2, a, b});
        return out;
    }
    std::set<Cls> p1(const Cls& c, std::set<std::string>& used) const {
        std::set<Cls> out;
        if (c.side != 1)
            for (auto a : A_.p1(c.a, used)) out.insert({c.side, a, c.b});
        if (c.side != 0)
            for (auto b : B_.p1(c.b, used)) out.insert({c.side, c.a, b});
        return out;
    }
    std::string name(const Cls& c) const {
        switch (c.side) {
            case 0: return "Σ" + A_.name(c.a) + "×1";
            case 1: return "1×Σ" + B_.name(c.b);
            default: return "Σ" + A_.name(c.a) + "×Σ" + B_.name(c.b);
        }
    }
    std::string names(const std::set<Cls>& s) const {
        std::string out;
        for (const auto& c : s) out += (out.empty() ? "" : ", ") + name(c);
        return "{" + out + "}";
    }

    // Applies P^1 `steps` times to the support, logging each step.
    std::set<Cls> propagate(std::set<Cls> support, int steps, std::vector<std::string>& trail,
                            std::set<std::string>& used) const {
        for (int s = 1; s <= steps && !support.empty(); ++s) {
            std::set<Cls> next;
            for (const auto& c : support) {
                auto img = p1(c, used);
                next.insert(img.begin(), img.end());
            }
            support = std::move(next);
            trail.push_back("P1 step " + std::to_string(s) + ": " + (support.empty() ? "0" : names(support)));
        }
        return support;
    }

private:
    const Exterior& A_;
    const Exterior& B_;
};

std::string skeleton_label(const Skeleton& s) { return s.summand + "^(" + std::to_string(s.top) + ")"; }

}  // namespace

std::vector<int> skeleton_class_degrees(const CWSummand& s, int top) {
    return Exterior(s, top, 5, s.name).class_degrees();
}

int skeleton_dim(const CWSummand& s, int top) {
    auto d = skeleton_class_degrees(s, top);
    return d.empty() ? 0 : d.back();
}

Condition4Result check_condition4(const CriterionInstance& inst, const FactBase& facts) {
    Condition4Result res;
    Exterior A(facts.summand(inst.a.summand), inst.a.top, facts.p, "A=" + skeleton_label(inst.a));
    Exterior B(facts.summand(inst.b.summand), inst.b.top, facts.p, "B=" + skeleton_label(inst.b));
    Product X(A, B);
    std::set<std::string> used;
    std::set<Cls> left;
    if (inst.pattern == CriterionInstance::Pattern::DegreeVanishing) {
        int d = facts.degree_of(inst.xk);
        auto start = X.basis(d);
        res.trail.push_back("H^" + std::to_string(d) + " basis: " + (start.empty() ? "0" : X.names(start)));
        left = X.propagate(start, inst.iterate, res.trail, used);
    } else {
        int d = facts.degree_of(inst.chain_base);
        auto start = X.basis(d);
        res.trail.push_back("H^" + std::to_string(d) + " basis: " + (start.empty() ? "0" : X.names(start)));
        bool forced = start.size() == 2 && std::all_of(start.begin(), start.end(), [&](const Cls& c) {
                          return c.side != 2 && std::popcount(c.side == 0 ? c.a : c.b) == 1;
                      });
        if (!forced) {
            res.trail.push_back("the pullback of " + inst.chain_base + " is not forced");
            res.surviving.push_back("unforced " + inst.chain_base);
            return res;
        }
        res.trail.push_back("pullback of " + inst.chain_base + " forced to the two suspension classes");
        int steps = 0;
        std::string g = inst.chain_base;
        while (g != inst.xk) {
            const ChainFact* c = facts.chain_from(g);
            if (!c) {
                res.trail.push_back("no chain fact from " + g + " towards " + inst.xk);
                res.surviving.push_back("chain broken at " + g);
                return res;
            }
            res.trail.push_back("P1 " + c->from + " = " + c->to + " [" + c->citation + "]");
            g = c->to;
            ++steps;
        }
        left = X.propagate(start, steps + inst.iterate, res.trail, used);
    }
    for (const auto& u : used) res.trail.push_back("fact used: " + u);
    res.discharged = left.empty();
    for (const auto& c : left) res.surviving.push_back(X.name(c));
    return res;
}

// ---- verdicts ----

const char* to_string(Verdict::Kind k) noexcept {
    switch (k) {
        case Verdict::Kind::ProvenNontrivial: return "Proven-Nontrivial";
        case Verdict::Kind::CertifiedTrivial: return "Certified-Trivial";
        case Verdict::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json j{{"verdict", to_string(kind)}, {"evidence", evidence}};
    if (!reason.empty()) j["reason"] = reason;
    if (!dimensions.empty()) j["dimensions"] = dimensions;
    return j;
}

CoefficientLookup paperchecks_lookup() {
    return [](const std::string& id, const std::string& label) -> std::optional<CoefficientEntry> {
        static std::mutex mu;
        static std::map<std::string, CheckReport> cache;
        std::lock_guard lock(mu);
        auto it = cache.find(id);
        if (it == cache.end()) it = cache.emplace(id, check(id)).first;
        for (const auto& c : it->second.coefficients)
            if (c.label == label) return c;
        return std::nullopt;
    };
}

Verdict check_criterion(const CriterionInstance& inst, const FactBase& facts, const CoefficientLookup& lookup) {
    Verdict v;
    auto fail = [&](std::string reason) {
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = std::move(reason);
        return v;
    };
    const int di = facts.degree_of(inst.xi), dj = facts.degree_of(inst.xj), dk = facts.degree_of(inst.xk);

    // (1) the maps detect x_i and x_j.
    for (auto [sk, x, d] : {std::tuple{inst.a, inst.xi, di}, std::tuple{inst.b, inst.xj, dj}}) {
        const PullbackFact* pb = facts.pullback(sk.summand, x);
        if (!pb) return fail("Condition1Failed: no pullback fact for " + x + " on " + sk.summand);
        const auto& degs = facts.summand(sk.summand).degrees;
        if (d - 1 > sk.top || std::find(degs.begin(), degs.end(), d - 1) == degs.end())
            return fail("Condition1Failed: " + skeleton_label(sk) + " has no generator in degree " + std::to_string(d - 1));
        v.evidence.push_back("(1) " + sk.summand + " detects " + x + " [" + pb->citation + "]; z" +
                             std::to_string(d - 1) + " lies in " + skeleton_label(sk));
    }
    // (2) dimensions.
    int dimA = skeleton_dim(facts.summand(inst.a.summand), inst.a.top);
    int dimB = skeleton_dim(facts.summand(inst.b.summand), inst.b.top);
    if (dimA != di - 1 || dimB != dj - 1)
        return fail("Condition2Failed: dim " + skeleton_label(inst.a) + " = " + std::to_string(dimA) + ", dim " +
                    skeleton_label(inst.b) + " = " + std::to_string(dimB) + ", need " + std::to_string(di - 1) +
                    " and " + std::to_string(dj - 1));
    v.evidence.push_back("(2) dim " + skeleton_label(inst.a) + " = " + std::to_string(dimA) + ", dim " +
                         skeleton_label(inst.b) + " = " + std::to_string(dimB));
    // (3) theta x_k > c x_i x_j with c != 0, from the decomposition checks.
    int shift = SteenrodOp{inst.iterate, facts.p}.degree_shift();
    if (dk + shift != di + dj)
        return fail("Condition3Failed: degree " + std::to_string(dk) + " + " + std::to_string(shift) + " != " +
                    std::to_string(di + dj));
    auto c = lookup(inst.coefficient_check, inst.coefficient_label);
    if (!c) return fail("Condition3Failed: " + inst.coefficient_check + " reports no " + inst.coefficient_label);
    if (!c->determined) return fail("Condition3Failed: " + inst.coefficient_label + " is not determined");
    if (c->value == 0) return fail("Condition3Failed: " + inst.coefficient_label + " vanishes");
    std::string cl = "(3) " + inst.coefficient_check + ": " + inst.coefficient_label + " coefficient " +
                     std::to_string(signed_residue(c->value, facts.p)) + " mod " + std::to_string(facts.p);
    if (c->claimed && *c->claimed != c->value)
        cl += " (displayed " + std::to_string(signed_residue(*c->claimed, facts.p)) + "; nonzero either way)";
    v.evidence.push_back(cl);
    // (4)
    auto c4 = check_condition4(inst, facts);
    for (const auto& t : c4.trail) v.evidence.push_back("(4) " + t);
    if (!c4.discharged) {
        std::string s;
        for (const auto& x : c4.surviving) s += (s.empty() ? "" : ", ") + x;
        return fail("Condition4Open: " + s + " may survive");
    }
    v.kind = Verdict::Kind::ProvenNontrivial;
    return v;
}

Verdict certify_trivial_e8(const FactBase& facts) {
    Verdict v;
    if (!facts.retract) {
        v.reason = "no retract fact";
        return v;
    }
    const auto& r = *facts.retract;
    v.evidence.push_back("axiom: Sigma A is a retract of Sigma " + r.summand + " compatible with the map to B" +
                         facts.group + ", A with cells " + join_ints(r.cells) + " [" + r.citation + "]");
    v.dimensions = smash_cell_dims(r.cells, r.cells);
    std::vector<int> missing;
    for (int d : v.dimensions) {
        if (const HomotopyFact* h = facts.vanishing(d))
            v.evidence.push_back("pi_" + std::to_string(d) + " = 0 [" + h->citation + "]");
        else
            missing.push_back(d);
    }
    v.evidence.push_back("cells of A^A: " + join_ints(v.dimensions));
    if (!missing.empty()) {
        v.reason = "no vanishing fact in dimension " + join_ints(missing);
        return v;
    }
    v.kind = Verdict::Kind::CertifiedTrivial;
    return v;
}

std::vector<CriterionInstance> default_instances(const FactBase& facts) {
    using P = CriterionInstance::Pattern;
    auto inst = [](std::string pairing, std::string name, std::string xi, std::string xj, std::string xk, int k,
                   Skeleton a, Skeleton b, std::string check, std::string label) {
        CriterionInstance c;
        c.pairing = std::move(pairing);
        c.name = std::move(name);
        c.xi = std::move(xi);
        c.xj = std::move(xj);
        c.xk = std::move(xk);
        c.iterate = k;
        c.a = std::move(a);
        c.b = std::move(b);
        c.coefficient_check = std::move(check);
        c.coefficient_label = std::move(label);
        return c;
    };
    std::vector<CriterionInstance> out;
    if (facts.group == "E7" && facts.p == 5) {
        out.push_back(inst("<eps1,eps2>", "<eps1|B1^(35), eps2|B2^(23)>", "x36", "x24", "x36", 3, {"B1", 35},
                           {"B2", 23}, "e7/p5/p1cube-x36", "x36*x24"));
        out.push_back(inst("<eps2,eps2>", "<eps2|S^15, eps2|S^15>", "x16", "x16", "x24", 1, {"B2", 15}, {"B2", 15},
                           "e7/p5/p1x24", "x16^2"));
        out.push_back(inst("<eps1,eps1>", "<eps1|B1^(19), eps1|B1^(11)>", "x20", "x12", "x16", 2, {"B1", 19},
                           {"B1", 11}, "e7/p5/p1sq-x16", "x20*x12"));
    } else if (facts.group == "E7" && facts.p == 7) {
        out.push_back(inst("<eps3,eps3>", "<eps3, eps3>", "x20", "x20", "x28", 1, {"S19", 19}, {"S19", 19},
                           "e7/p7/p1x28", "x20^2"));
        out.push_back(inst("<eps2,eps3>", "<eps2|S^11, eps3>", "x12", "x20", "x20", 1, {"B2", 11}, {"S19", 19},
                           "e7/p7/p1x20", "x20*x12"));
        out.push_back(inst("<eps1,eps1>", "<eps1|B1^(27), eps1|S^3>", "x28", "x4", "x20", 1, {"B1", 27}, {"B1", 3},
                           "e7/p7/p1x20", "x28*x4"));
        out.push_back(inst("<eps1,eps2>", "<eps1|B1^(27), eps2|S^11>", "x28", "x12", "x28", 1, {"B1", 27},
                           {"B2", 11}, "e7/p7/p1x28", "x28*x12"));
        out.push_back(inst("<eps1,eps3>", "<eps1|B1^(27), eps3>", "x28", "x20", "x36", 1, {"B1", 27}, {"S19", 19},
                           "e7/p7/p1x36", "x28*x20"));
        auto b = inst("<eps2,eps2>", "<eps2|B2^(35), eps2|B2^(11)>", "y36", "y12", "y36", 1, {"B2", 35}, {"B2", 11},
                      "e7/p7/y-chain", "y36*y12");
        b.pattern = P::ForcedPrimitive;
        b.chain_base = "y12";
        out.push_back(b);
    } else if (facts.group == "E8" && facts.p == 7) {
        out.push_back(inst("<eps1,eps2>", "<eps1|B1^(27), eps2|S^23>", "x28", "x24", "x40", 1, {"B1", 27},
                           {"B2", 23}, "e8/p7/p1-x40", "x28*x24"));
        auto b = inst("<eps2,eps2>", "<eps2|B2^(47), eps2|B2^(23)>", "y48", "y24", "y60", 1, {"B2", 47}, {"B2", 23},
                      "e8/p7/y-chain", "y48*y24");
        b.pattern = P::ForcedPrimitive;
        b.chain_base = "y24";
        out.push_back(b);
    }
    return out;
}

std::vector<PairingResult> run_suite(const FactBase& facts, const CoefficientLookup& lookup) {
    std::vector<PairingResult> out;
    for (const auto& inst : default_instances(facts)) out.push_back({inst.pairing, inst.name, check_criterion(inst, facts, lookup)});
    if (facts.group == "E8") out.push_back({"<eps1,eps1>", "<eps1|A, eps1|A>", certify_trivial_e8(facts)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pairing < b.pairing; });
    return out;
}

}  // namespace stpow
