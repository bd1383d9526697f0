#include "suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

namespace stpow::cli {

namespace {

using Clock = std::chrono::steady_clock;

bool prime_matches(const std::string& id, const std::optional<u32>& p) {
    if (!p) return true;
    bool has5 = id.find("/p5/") != std::string::npos, has7 = id.find("/p7/") != std::string::npos;
    if (!has5 && !has7) return true;  // covers both primes
    return (*p == 5 && has5) || (*p == 7 && has7);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool runs_samelson(const SuiteConfig& cfg) {
    return cfg.suite == "all" || cfg.suite == "samelson" || cfg.suite == "e7" || cfg.suite == "e8";
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"e7", "e8", "sym", "steenrod", "samelson", "all"};
    return names;
}

std::vector<std::string> selected_checks(const SuiteConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.suite == "samelson") return out;
    for (const auto& id : check_ids()) {
        if (cfg.suite != "all" && id.rfind(cfg.suite + "/", 0) != 0) continue;
        if (prime_matches(id, cfg.prime)) out.push_back(id);
    }
    return out;
}

std::vector<FactBase> selected_fact_bases(const SuiteConfig& cfg) {
    std::vector<FactBase> out;
    if (!runs_samelson(cfg)) return out;
    std::map<std::pair<std::string, u32>, FactBase> bases;
    for (const char* f : {"e7_p5.json", "e7_p7.json", "e8_p7.json"}) {
        FactBase fb = FactBase::load((std::filesystem::path(cfg.facts_dir) / f).string());
        bases[{fb.group, fb.p}] = std::move(fb);
    }
    for (const auto& path : cfg.facts) {
        FactBase fb = FactBase::load(path);
        bases[{fb.group, fb.p}] = std::move(fb);
    }
    for (auto& [key, fb] : bases) {
        if (cfg.prime && fb.p != *cfg.prime) continue;
        if ((cfg.suite == "e7" || cfg.suite == "e8") && lower(fb.group) != cfg.suite) continue;
        out.push_back(std::move(fb));
    }
    return out;
}

std::string samelson_id(const FactBase& facts, const std::string& pairing) {
    std::string pr;
    for (char c : pairing)
        if (c == ',') pr += '-';
        else if (c != '<' && c != '>') pr += c;
    return "samelson/" + lower(facts.group) + "/p" + std::to_string(facts.p) + "/" + pr;
}

SuiteReport run_verify(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    SuiteReport rep;
    rep.strict = cfg.strict;

    const auto ids = selected_checks(cfg);
    const auto bases = selected_fact_bases(cfg);

    std::vector<CheckReport> reports(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < ids.size();) reports[i] = check(ids[i]);
    };
    unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(ids.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Samelson condition (3) reads the reports computed above when it can.
    std::map<std::string, const CheckReport*> by_id;
    for (const auto& r : reports) by_id[r.id] = &r;
    CoefficientLookup fallback = paperchecks_lookup();
    CoefficientLookup lookup = [&](const std::string& id, const std::string& label) -> std::optional<CoefficientEntry> {
        auto it = by_id.find(id);
        if (it == by_id.end()) return fallback(id, label);
        for (const auto& c : it->second->coefficients)
            if (c.label == label) return c;
        return std::nullopt;
    };

    for (const auto& r : reports) rep.entries.push_back({r.id, r.status, r.line(), r.to_json()});
    for (const auto& fb : bases) {
        for (const auto& pr : run_suite(fb, lookup)) {
            const auto s0 = Clock::now();
            SuiteEntry e;
            e.id = samelson_id(fb, pr.pairing);
            e.status = pr.verdict.kind == Verdict::Kind::Inconclusive ? CheckStatus::Ambiguous : CheckStatus::Pass;
            e.line = std::string(to_string(e.status)) + "  " + e.id + "  " + pr.instance + ": " +
                     to_string(pr.verdict.kind);
            if (!pr.verdict.reason.empty()) e.line += " (" + pr.verdict.reason + ")";
            if (!pr.verdict.dimensions.empty()) {
                std::string d;
                for (int x : pr.verdict.dimensions) d += (d.empty() ? "" : ",") + std::to_string(x);
                e.line += " cells {" + d + "}";
            }
            e.json = pr.verdict.to_json();
            e.json["id"] = e.id;
            e.json["status"] = to_string(e.status);
            e.json["group"] = fb.group;
            e.json["p"] = fb.p;
            e.json["pairing"] = pr.pairing;
            e.json["instance"] = pr.instance;
            e.json["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - s0).count();
            rep.entries.push_back(std::move(e));
        }
    }
    std::stable_sort(rep.entries.begin(), rep.entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : rep.entries) {
        switch (e.status) {
            case CheckStatus::Pass: ++rep.pass; break;
            case CheckStatus::Fail: ++rep.fail; break;
            case CheckStatus::Ambiguous: ++rep.ambiguous; break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

std::string SuiteReport::summary() const {
    return "summary: " + std::to_string(entries.size()) + " checks, " + std::to_string(pass) + " pass, " +
           std::to_string(fail) + " fail, " + std::to_string(ambiguous) + " ambiguous  [" +
           std::to_string(static_cast<long>(elapsed_ms)) + " ms]";
}

nlohmann::json SuiteReport::to_json(const SuiteConfig& cfg) const {
    using nlohmann::json;
    json checks = json::array(), sam = json::array();
    for (const auto& e : entries) (e.id.rfind("samelson/", 0) == 0 ? sam : checks).push_back(e.json);
    return json{{"config",
                 {{"suite", cfg.suite},
                  {"prime", cfg.prime ? json(*cfg.prime) : json(nullptr)},
                  {"strict", cfg.strict},
                  {"jobs", cfg.jobs}}},
                {"checks", checks},
                {"samelson", sam},
                {"summary", {{"total", entries.size()}, {"pass", pass}, {"fail", fail}, {"ambiguous", ambiguous}}},
                {"elapsed_ms", elapsed_ms},
                {"exit_code", exit_code()}};
}

}  // namespace stpow::cli
