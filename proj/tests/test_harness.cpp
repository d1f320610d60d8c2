#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gcpoly/harness.hpp"

using namespace gcp;

TEST_SUITE("harness") {

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK(std::find(names.begin(), names.end(), "frobenius") != names.end());
    CHECK_THROWS_AS(run_suite("bogus", SuiteConfig{}), ConfigError);
}

TEST_CASE("reports are well formed and deterministic") {
    SuiteConfig cfg;
    SuiteReport rep = run_suite("affine", cfg);
    CHECK(rep.all_pass());
    CHECK(rep.summary() == "7/7 checks passed");
    auto j = nlohmann::json::parse(rep.to_json(false));
    CHECK(j["suite"] == "affine");
    CHECK(j["seed"] == 1);
    CHECK(j["checks"].size() == 7);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c["status"] == "pass");
        CHECK(c["ms"] == 0);
    }
    // check ids are unique and stable across runs
    SuiteReport rep2 = run_suite("affine", cfg);
    CHECK(rep.to_json(false) == rep2.to_json(false));
}

TEST_CASE("failures surface as failed checks, not crashes") {
    SuiteConfig cfg;
    cfg.group_cap = 2;  // forces ResourceError inside enumeration
    SuiteReport rep = run_suite("presentation", cfg);
    CHECK_FALSE(rep.all_pass());
    bool saw_error = false;
    for (const auto& c : rep.checks)
        if (!c.pass && c.witness.rfind("error:", 0) == 0) saw_error = true;
    CHECK(saw_error);
}

TEST_CASE("word explanation") {
    std::string text = explain_word("s1 t2 t2 s1", GroupDescriptor(3, 1, 2));
    CHECK(text.find("echelon form: 't1 t1'") != std::string::npos);
    CHECK(text.find("ct-key") != std::string::npos);
    CHECK_THROWS_AS(explain_word("s7", GroupDescriptor(2, 1, 2)), ParseError);
}

}  // TEST_SUITE
