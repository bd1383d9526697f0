#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "suite.hpp"

using namespace stpow;
using namespace stpow::cli;

namespace {

SuiteConfig config(std::string suite, std::optional<u32> p = std::nullopt) {
    SuiteConfig c;
    c.suite = std::move(suite);
    c.prime = p;
    c.facts_dir = STPOW_FACTS_DIR;
    c.jobs = 2;
    return c;
}

}  // namespace

TEST(Selection, Filters) {
    auto e8 = selected_checks(config("e8"));
    ASSERT_FALSE(e8.empty());
    for (const auto& id : e8) EXPECT_EQ(id.rfind("e8/", 0), 0u);
    for (const auto& id : selected_checks(config("e7", 5u))) EXPECT_EQ(id.find("/p7/"), std::string::npos) << id;
    EXPECT_TRUE(selected_checks(config("samelson")).empty());
    EXPECT_EQ(selected_fact_bases(config("samelson")).size(), 3u);
    EXPECT_EQ(selected_fact_bases(config("e7")).size(), 2u);
    EXPECT_EQ(selected_fact_bases(config("samelson", 5u)).size(), 1u);
    EXPECT_TRUE(selected_fact_bases(config("sym")).empty());
}

TEST(Verify, E8Passes) {
    auto rep = run_verify(config("e8"));
    EXPECT_EQ(rep.fail, 0u);
    EXPECT_EQ(rep.exit_code(), 0);
    EXPECT_TRUE(std::is_sorted(rep.entries.begin(), rep.entries.end(),
                               [](const auto& a, const auto& b) { return a.id < b.id; }));
    auto it = std::find_if(rep.entries.begin(), rep.entries.end(),
                           [](const auto& e) { return e.id == "samelson/e8/p7/eps1-eps1"; });
    ASSERT_NE(it, rep.entries.end());
    EXPECT_EQ(it->json["verdict"], "Certified-Trivial");
}

TEST(Verify, SymPasses) {
    auto rep = run_verify(config("sym"));
    EXPECT_GT(rep.pass, 0u);
    EXPECT_EQ(rep.exit_code(), 0);
}

// The open E7 p=5 mixed pairing is AMBIGUOUS, which fails only under --strict.
TEST(Verify, StrictTurnsAmbiguousIntoFailure) {
    auto c = config("samelson", 5u);
    auto rep = run_verify(c);
    EXPECT_EQ(rep.ambiguous, 1u);
    EXPECT_EQ(rep.exit_code(), 0);
    c.strict = true;
    EXPECT_EQ(run_verify(c).exit_code(), 1);
}

TEST(Verify, JsonShape) {
    auto c = config("e8");
    auto j = run_verify(c).to_json(c);
    for (const char* k : {"config", "checks", "samelson", "summary", "elapsed_ms", "exit_code"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["config"]["suite"], "e8");
    EXPECT_TRUE(j["config"]["prime"].is_null());
    std::size_t total = j["checks"].size() + j["samelson"].size();
    EXPECT_EQ(j["summary"]["total"], total);
    for (const auto& v : j["samelson"]) {
        EXPECT_EQ(v["group"], "E8");
        EXPECT_EQ(v["p"], 7);
    }
}

TEST(Verify, FactOverride) {
    auto fb = FactBase::load(std::string(STPOW_FACTS_DIR) + "/e8_p7.json");
    fb.homotopy_vanishing.pop_back();
    std::string path = ::testing::TempDir() + "/e8_cut.json";
    std::ofstream(path) << fb.to_json().dump(2);
    auto c = config("samelson", 7u);
    c.facts = {path};
    auto rep = run_verify(c);
    auto it = std::find_if(rep.entries.begin(), rep.entries.end(),
                           [](const auto& e) { return e.id == "samelson/e8/p7/eps1-eps1"; });
    ASSERT_NE(it, rep.entries.end());
    EXPECT_EQ(it->status, CheckStatus::Ambiguous);
}

TEST(Verify, JobsAgree) {
    auto c = config("e7", 7u);
    c.jobs = 1;
    auto a = run_verify(c);
    c.jobs = 4;
    auto b = run_verify(c);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].id, b.entries[i].id);
        EXPECT_EQ(a.entries[i].status, b.entries[i].status);
    }
}
