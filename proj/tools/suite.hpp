#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stpow/paperchecks.hpp"
#include "stpow/samelson.hpp"

namespace stpow::cli {

struct SuiteConfig {
    std::optional<u32> prime;  // 5 or 7; unset runs both
    std::string suite = "all";  // e7, e8, sym, steenrod, samelson, all
    bool strict = false;        // AMBIGUOUS counts as a failure
    std::string facts_dir;
    std::vector<std::string> facts;  // override the shipped base with the same group and prime
    unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

// One line of the report: a registered check or a Samelson verdict.
struct SuiteEntry {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string line;
    nlohmann::json json;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;  // sorted by id
    std::size_t pass = 0, fail = 0, ambiguous = 0;
    double elapsed_ms = 0;
    bool strict = false;

    int exit_code() const { return fail || (strict && ambiguous) ? 1 : 0; }
    std::string summary() const;
    nlohmann::json to_json(const SuiteConfig& cfg) const;
};

// Check ids selected by the suite and prime filters.
std::vector<std::string> selected_checks(const SuiteConfig& cfg);
// The fact bases the Samelson part of the suite reads, keyed "E7/5" etc.
std::vector<FactBase> selected_fact_bases(const SuiteConfig& cfg);

SuiteReport run_verify(const SuiteConfig& cfg);

std::string samelson_id(const FactBase& facts, const std::string& pairing);

}  // namespace stpow::cli
