#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcpoly/group.hpp"

namespace gcp {

struct SuiteConfig {
    std::uint64_t seed = 1;
    unsigned r = 2;
    unsigned p = 1;
    unsigned n = 2;
    std::string roots = "A2";
    double tol = 1e-9;
    double char_tol = 1e-6;
    unsigned trials = 12;
    std::size_t group_cap = 20000;
    std::size_t rep_cap = 200;
    std::size_t word_cap = 64;
    std::size_t weight_cap = 6;
    unsigned det_cap = 8;
    /// Real per-check durations in the JSON report; off by default so that
    /// identical config and seed produce byte-identical reports.
    bool timings = false;
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;
    long ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string summary() const;
    std::string to_json(bool timings) const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Unknown names raise ConfigError; module
/// errors inside a check surface as a failed check, never as a crash.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Human-readable walkthrough: word, signature, ct-key, echelonization trace
/// and the evaluated group element.
std::string explain_word(const std::string& text, const GroupDescriptor& desc);

}  // namespace gcp
