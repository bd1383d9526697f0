// stpow: verification harness and interactive access to the library.
#include <iostream>

#include "CLI11.hpp"

#include "stpow/idealred.hpp"
#include "stpow/weyl.hpp"
#include "suite.hpp"

using namespace stpow;

namespace {

constexpr int kUsage = 2;

struct RingChoice {
    Ring ring;
    SymbolTable symbols;
};

// spin16, spin12: free Spin rings; t7: the E7 torus (t8 = t7) with c_i, q_i,
// p_i, e6 as symbols; u7: the same in u-coordinates, truncated mod (u1,u7)^2.
RingChoice pick_ring(const std::string& name, u32 p) {
    if (name == "spin16") return {spin_ring(8, p)->free_ring(), {}};
    if (name == "spin12") return {spin_ring(6, p)->free_ring(), {}};
    if (name == "t7") return {e7_frame(p).t, e7_frame(p).t_symbols()};
    if (name == "u7") return {e7_frame(p).u, e7_frame(p).u_symbols()};
    throw Error(ErrorKind::UnknownName, "ring " + name);
}

int cmd_verify(const cli::SuiteConfig& cfg, const std::string& format) {
    auto rep = cli::run_verify(cfg);
    if (format == "json") {
        std::cout << rep.to_json(cfg).dump(2) << "\n";
    } else {
        for (const auto& e : rep.entries) std::cout << e.line << "\n";
        std::cout << rep.summary() << "\n";
    }
    return rep.exit_code();
}

int cmd_p1(const std::string& expr, const std::string& ring, u32 p, int iterate) {
    auto rc = pick_ring(ring, p);
    Poly f = parse_poly(expr, rc.ring, rc.symbols);
    if (ring == "u7") throw Error(ErrorKind::RingMismatch, "P1 is computed on t7, spin12 or spin16");
    for (int i = 0; i < iterate; ++i) f = ring == "t7" ? p1_on_t_ring(f) : apply_op({1, p}, f);
    std::cout << to_string(f) << "\n";
    return 0;
}

int cmd_reduce(const std::string& expr, const std::string& ideal, const std::string& ring, u32 p) {
    auto rc = pick_ring(ring, p);
    Poly f = parse_poly(expr, rc.ring, rc.symbols);
    std::cout << to_string(reduce(f, parse_ideal(ideal, rc.ring, rc.symbols))) << "\n";
    return 0;
}

int cmd_invariants(int degree, const std::string& ideal, u32 p, bool exclude_q) {
    const E7Frame& fr = e7_frame(p);
    IdealSpec spec = parse_ideal(ideal, fr.u, fr.u_symbols());
    SolutionSpace sol = solve_phi1_invariants({degree, p, spec, exclude_q});
    Ring inv = invariant_ring(p);
    std::cout << "dimension " << sol.dimension() << "\n";
    for (const auto& v : sol.basis) {
        PolyBuilder b(inv);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) b.add(sol.ansatz[i], v[i]);
        std::cout << "  " << to_string(std::move(b).build()) << "\n";
    }
    return 0;
}

int cmd_facts_validate(const std::vector<std::string>& paths) {
    int rc = 0;
    for (const auto& path : paths) {
        try {
            FactBase fb = FactBase::load(path);
            std::size_t n = fb.pullbacks.size() + fb.homotopy_vanishing.size() + fb.chains.size();
            for (const auto& s : fb.summands) n += s.p1_facts.size();
            std::cout << "OK    " << path << "  " << fb.group << " p=" << fb.p << ", " << fb.summands.size()
                      << " summands, " << n << " cited facts\n";
        } catch (const Error& e) {
            std::cout << "FAIL  " << path << "  " << e.what() << "\n";
            rc = 1;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic verification of Steenrod P1 computations in H*(BE7), H*(BE8) at p = 5, 7"};
    app.require_subcommand(1);

    cli::SuiteConfig cfg;
    cfg.facts_dir = STPOW_FACTS_DIR;
    std::string format = "text";
    bool all = false;
    u32 vprime = 0;
    auto* verify = app.add_subcommand("verify", "Run the registered checks and the Samelson suite");
    verify->add_option("--suite", cfg.suite, "Check family")->check(CLI::IsMember(cli::suite_names()));
    verify->add_flag("--all", all, "Every suite and both primes");
    verify->add_option("--prime", vprime, "Restrict to one prime")->check(CLI::IsMember({5u, 7u}));
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--strict", cfg.strict, "Treat AMBIGUOUS as failure");
    verify->add_option("--facts-dir", cfg.facts_dir, "Directory with the shipped fact bases")
        ->check(CLI::ExistingDirectory);
    verify->add_option("--facts", cfg.facts, "Fact base replacing the one with the same group and prime")
        ->check(CLI::ExistingFile);
    verify->add_option("--jobs,-j", cfg.jobs, "Checks run concurrently")->check(CLI::Range(1u, 256u));

    std::string expr, ring = "spin16", ideal;
    u32 prime = 7;
    int iterate = 1, degree = 0;
    bool exclude_q = false;
    auto* p1 = app.add_subcommand("p1", "Apply (P1)^k to a polynomial");
    p1->add_option("expr", expr, "Polynomial")->required();
    p1->add_option("--ring", ring, "spin16, spin12 or t7")->check(CLI::IsMember({"spin16", "spin12", "t7"}));
    p1->add_option("--prime", prime)->check(CLI::IsMember({5u, 7u}));
    p1->add_option("--iterate,-k", iterate)->check(CLI::Range(0, 16));

    auto* red = app.add_subcommand("reduce", "Normal form modulo an ideal");
    red->add_option("expr", expr, "Polynomial")->required();
    red->add_option("--ideal", ideal, "e.g. \"(p1)+I^3\", \"(c1,t7)^2+(q1^2)\"")->required();
    red->add_option("--ring", ring, "spin16, spin12, t7 or u7")
        ->check(CLI::IsMember({"spin16", "spin12", "t7", "u7"}));
    red->add_option("--prime", prime)->check(CLI::IsMember({5u, 7u}));

    auto* inv = app.add_subcommand("invariants", "phi1-invariants of Z/p[q1..q5,e6] modulo an ideal");
    inv->add_option("--degree", degree)->required()->check(CLI::Range(2, 60));
    inv->add_option("--ideal", ideal, "Ideal over the E7 torus")->default_val("(c1,t7)^2");
    inv->add_option("--prime", prime)->check(CLI::IsMember({5u, 7u}));
    inv->add_flag("--exclude-q1", exclude_q, "Leave the (q1^n) monomials out of the ansatz");

    std::vector<std::string> paths;
    auto* facts = app.add_subcommand("facts", "Fact-base utilities");
    facts->require_subcommand(1);
    auto* fv = facts->add_subcommand("validate", "Check degrees and citations of fact bases");
    fv->add_option("paths", paths, "Fact-base files (default: the shipped ones)")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            if (vprime) cfg.prime = vprime;
            if (all) {
                cfg.suite = "all";
                cfg.prime.reset();
            }
            return cmd_verify(cfg, format);
        }
        if (*p1) return cmd_p1(expr, ring, prime, iterate);
        if (*red) return cmd_reduce(expr, ideal, ring, prime);
        if (*inv) return cmd_invariants(degree, ideal, prime, exclude_q);
        if (*fv) {
            if (paths.empty())
                for (const char* f : {"e7_p5.json", "e7_p7.json", "e8_p7.json"})
                    paths.push_back(std::string(STPOW_FACTS_DIR) + "/" + f);
            return cmd_facts_validate(paths);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::FactBaseError || e.kind() == ErrorKind::ParseError ||
                       e.kind() == ErrorKind::UnknownName || e.kind() == ErrorKind::IdealMismatch ||
                       e.kind() == ErrorKind::RingMismatch
                   ? kUsage
                   : 1;
    }
    return kUsage;
}
