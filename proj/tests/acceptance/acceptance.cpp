// One PASS/FAIL line per acceptance criterion. Coefficients are compared
// exactly in Z/p; each criterion also has a wall-clock limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "../unit/gen.hpp"
#include "stpow/steenrod.hpp"
#include "suite.hpp"

using namespace stpow;
using nlohmann::json;

static_assert(testgen::kCases >= 200);

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::vector<std::string> misses;
    std::vector<std::string> info;
    std::set<std::string> timed;  // checks whose run time is already counted
    double seconds = 0;

    void charge(const json& r) {
        if (timed.insert(r["id"].get<std::string>()).second) seconds += r["elapsed_ms"].get<double>() / 1000;
    }

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            misses.push_back(what);
        }
    }
};

class Reports {
public:
    explicit Reports(const cli::SuiteReport& rep) {
        for (const auto& e : rep.entries) by_id_[e.id] = e.json;
    }

    const json& at(const std::string& id) const {
        auto it = by_id_.find(id);
        if (it == by_id_.end()) throw std::runtime_error("missing check " + id);
        return it->second;
    }

    // The coefficient `label` of check `id` must be `expected` mod p.
    void pin(Outcome& out, const std::string& id, const std::string& label, long expected) const {
        const json& r = at(id);
        out.charge(r);
        long p = r["p"].get<long>();
        for (const auto& c : r["coefficients"]) {
            if (c["label"] != label) continue;
            long want = c["kind"] == "residue" ? ((expected % p) + p) % p : expected;
            std::ostringstream s;
            s << id << " " << label << " = " << c["signed"].get<long>() << ", required " << expected;
            out.require(c["determined"].get<bool>() && c["value"].get<long>() == want, s.str());
            return;
        }
        out.require(false, id + " has no coefficient " + label);
    }

    void passes(Outcome& out, const std::string& id) const {
        const json& r = at(id);
        out.charge(r);
        out.require(r["status"] == "PASS", id + " is " + r["status"].get<std::string>());
    }

private:
    std::map<std::string, json> by_id_;
};

void report(int n, const std::string& title, const Outcome& out, double limit) {
    bool in_time = out.seconds < limit;
    std::printf("%s  %2d  %s  [%.2f s, limit %.0f s]\n", out.ok && in_time ? "PASS" : "FAIL", n, title.c_str(),
                out.seconds, limit);
    for (const auto& m : out.misses) std::printf("          %s\n", m.c_str());
    for (const auto& m : out.info) std::printf("          note: %s\n", m.c_str());
    if (!in_time) std::printf("          over the time limit\n");
}

Outcome wu_equivalence() {
    Outcome out;
    auto t0 = Clock::now();
    for (u32 p : {5u, 7u})
        for (int m = 3; m <= 6; ++m)
            for (int n = 1; n <= m; ++n)
                out.require(p1_wu(n, m, p) == wu_oracle(n, m, p),
                            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p));
    out.seconds = seconds_since(t0);
    return out;
}

Outcome samelson_table(const Reports& r) {
    Outcome out;
    const std::map<std::string, std::string> expected{
        {"samelson/e7/p5/eps1-eps1", "Proven-Nontrivial"}, {"samelson/e7/p5/eps1-eps2", "Proven-Nontrivial"},
        {"samelson/e7/p5/eps2-eps2", "Proven-Nontrivial"}, {"samelson/e7/p7/eps1-eps1", "Proven-Nontrivial"},
        {"samelson/e7/p7/eps1-eps2", "Proven-Nontrivial"}, {"samelson/e7/p7/eps1-eps3", "Proven-Nontrivial"},
        {"samelson/e7/p7/eps2-eps2", "Proven-Nontrivial"}, {"samelson/e7/p7/eps2-eps3", "Proven-Nontrivial"},
        {"samelson/e7/p7/eps3-eps3", "Proven-Nontrivial"}, {"samelson/e8/p7/eps1-eps2", "Proven-Nontrivial"},
        {"samelson/e8/p7/eps2-eps2", "Proven-Nontrivial"}, {"samelson/e8/p7/eps1-eps1", "Certified-Trivial"},
    };
    for (const auto& [id, verdict] : expected) {
        const json& v = r.at(id);
        out.seconds += v["elapsed_ms"].get<double>() / 1000;
        std::string got = v["verdict"];
        out.require(got == verdict, id + " is " + got + (v.contains("reason") ? " (" + v["reason"].get<std::string>() + ")" : ""));
    }
    const json& cert = r.at("samelson/e8/p7/eps1-eps1");
    out.require(cert.value("dimensions", json::array()) == json({6, 18, 30, 42, 54, 66, 78}),
                "E8 certificate cells differ from {6,18,30,42,54,66,78}");
    return out;
}

Outcome properties(double verify_seconds) {
    Outcome out;
    std::fflush(stdout);
    auto t0 = Clock::now();
    std::string cmd = std::string(STPOW_UNIT_TESTS) + " --gtest_filter=Property.*:Suite.MonotoneUnderRandomRemoval --gtest_brief=1 > /dev/null";
    out.require(std::system(cmd.c_str()) == 0, "property tests failed; run unit_tests --gtest_filter=Property.*");
    out.seconds = seconds_since(t0);
    std::ostringstream s;
    s << "verify --all took " << verify_seconds << " s";
    out.require(verify_seconds < 600, s.str());
    out.seconds += verify_seconds;
    return out;
}

}  // namespace

int main() {
    cli::SuiteConfig cfg;
    cfg.suite = "all";
    cfg.facts_dir = STPOW_FACTS_DIR;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto t0 = Clock::now();
    const auto rep = cli::run_verify(cfg);
    const double verify_seconds = seconds_since(t0);
    const Reports r(rep);

    std::vector<bool> results;
    auto record = [&](int n, const std::string& title, const Outcome& out, double limit) {
        std::fflush(stdout);
        report(n, title, out, limit);
        results.push_back(out.ok && out.seconds < limit);
    };

    record(1, "Wu formula = t-derivation oracle, n <= m, m in 3..6, p in {5,7}", wu_equivalence(), 30);

    {
        Outcome o;
        r.pin(o, "e8/p7/p1-x40", "P1 x40[p7*p6]", 1);
        r.pin(o, "e8/p7/p1-x40", "x28*x24", -3);
        r.passes(o, "e8/p7/p1-x40");
        record(2, "E8 P1 x40: witness p7*p6 = 1, x28*x24 = -3", o, 60);
    }
    {
        Outcome o;
        r.pin(o, "e8/p7/y-chain", "y48[p7*p5]", 1);
        r.pin(o, "e8/p7/y-chain", "y48[p6^2]", 2);
        r.pin(o, "e8/p7/y-chain", "P1 y60[p7*p6*p5]", 1);
        r.pin(o, "e8/p7/y-chain", "y48*y24", 2);
        r.passes(o, "e8/p7/y-chain");
        record(3, "E8 y-chain: y48 witnesses, P1 y60 > p7*p6*p5, y48*y24 = 2", o, 300);
    }
    {
        Outcome o;
        const std::map<int, int> counts{{4, 1}, {12, 2}, {16, 3}, {20, 2}, {24, 3}, {28, 2}, {36, 4}};
        double heaviest = 0;
        for (u32 p : {5u, 7u})
            for (const auto& [d, k] : counts) {
                std::string id = "e7/p" + std::to_string(p) + "/invariants-d" + std::to_string(d);
                heaviest = std::max(heaviest, r.at(id)["elapsed_ms"].get<double>() / 1000);
                r.pin(o, id, "parameters", k);
                r.pin(o, id, "solution span = xbar span", 1);
            }
        o.seconds = heaviest;
        record(4, "E7 invariant counts 1,2,3,2,3,2,4 and xbar spans (heaviest solve timed)", o, 300);
    }
    {
        Outcome o;
        for (const char* id : {"e7/p5/xbar-invariance", "e7/p7/xbar-invariance"})
            for (const auto& c : r.at(id)["coefficients"]) r.pin(o, id, c["label"], 1);
        record(5, "E7 xbar invariance, all seven, p = 5 and 7", o, 300);
    }
    {
        Outcome o;
        r.pin(o, "e7/p5/p1sq-x16", "x20*x12", -1);
        r.pin(o, "e7/p5/p1x24", "x16^2", 2);
        r.pin(o, "e7/p5/p1cube-x36", "x36*x24", 1);
        r.pin(o, "e7/p5/p1x16", "x24", 3);
        r.pin(o, "e7/p5/p1x20", "x28", 1);
        r.pin(o, "e7/p5/p1x28", "x36", 3);
        r.pin(o, "e7/p5/p1x4", "x12", -1);
        record(6, "E7 p=5 decompositions and intermediates", o, 60);
    }
    {
        Outcome o;
        r.pin(o, "e7/p7/p1x20", "x28*x4", -2);
        r.pin(o, "e7/p7/p1x20", "x20*x12", 1);
        r.pin(o, "e7/p7/p1x28", "x20^2", 4);
        r.pin(o, "e7/p7/p1x36", "x28*x20", 1);
        const json& x28 = r.at("e7/p7/p1x28");
        for (const auto& c : x28["coefficients"])
            if (c["label"] == "x28*x12")
                o.info.push_back("x28*x12 in P1 x28 is " + std::to_string(c["signed"].get<long>()) + ", reported only");
        record(7, "E7 p=7 P1 x20, P1 x28, P1 x36", o, 60);
    }
    {
        Outcome o;
        r.pin(o, "e7/p7/y-chain", "y36 display mod (p1,e6)", 1);
        r.pin(o, "e7/p7/y-chain", "y36*y12", 5);
        record(8, "E7 p=7 y36 = 3p5p2^2 + 2p3^3 mod (p1,e6), y36*y12 = 5", o, 60);
    }
    record(9, "Samelson verdict table", samelson_table(r), 10);
    record(10, "property suites (>= 200 cases each) and verify --all under 10 min", properties(verify_seconds), 600);

    int passed = static_cast<int>(std::count(results.begin(), results.end(), true));
    std::printf("acceptance: %d of %zu criteria pass\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
