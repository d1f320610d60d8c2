// Acceptance gate: every criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "gcpoly/harness.hpp"

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> id_prefixes;
    long ms_limit;
};

bool matches(const std::string& id, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes)
        if (id.rfind(p, 0) == 0) return true;
    return false;
}

}  // namespace

int main() {
    gcp::SuiteConfig cfg;
    std::vector<gcp::CheckResult> checks;
    for (const char* suite : {"presentation", "prop22", "echelon", "thm24", "thm36",
                              "product", "frobenius", "thm44", "grpn", "affine"}) {
        gcp::SuiteReport rep = gcp::run_suite(suite, cfg);
        checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
    }

    const std::vector<Criterion> criteria = {
        {1, "defining relations and generator identities hold exactly",
         {"presentation/relations-", "prop22/"}, 1000},
        {2, "closure enumeration reproduces the group orders",
         {"presentation/order-"}, 5000},
        {3, "every transformation preserves conjugacy and never increases ct",
         {"echelon/rule-soundness-"}, 120000},
        {4, "echelonization terminates in budget with a conjugate echelon word",
         {"echelon/normalize-"}, 300000},
        {5, "ct keys are injective on echelon words and recoverable",
         {"echelon/ct-key-"}, 1000},
        {6, "brute-force and coefficient signature sums agree",
         {"thm24/"}, 60000},
        {7, "characteristic polynomial equality matches equivalence",
         {"thm36/"}, 120000},
        {8, "the same equality criterion holds for product groups",
         {"product/"}, 120000},
        {9, "the regular pencil determinant factors over the constituents",
         {"frobenius/"}, 60000},
        {10, "diagonal generators span A(r,p,n) with recoverable exponents",
         {"grpn/"}, 30000},
        {11, "quotient families give one verdict across generating-set variants",
         {"thm44/"}, 300000},
        {12, "affine reflections and cover sets behave as required",
         {"affine/"}, 10000},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        bool pass = true;
        std::string why;
        long total_ms = 0;
        std::size_t matched = 0;
        for (const auto& chk : checks) {
            if (!matches(chk.id, c.id_prefixes)) continue;
            ++matched;
            total_ms += chk.ms;
            if (!chk.pass && why.empty()) {
                pass = false;
                why = chk.id + (chk.witness.empty() ? "" : ": " + chk.witness);
            }
        }
        if (matched == 0) {
            pass = false;
            why = "no checks matched";
        }
        if (pass && total_ms >= c.ms_limit) {
            pass = false;
            why = "time limit exceeded: " + std::to_string(total_ms) + " ms";
        }
        std::printf("%s  %2d  %s (%zu checks, %ld ms)%s%s\n", pass ? "PASS" : "FAIL",
                    c.number, c.description.c_str(), matched, total_ms,
                    why.empty() ? "" : " -- ", why.c_str());
        if (!pass) ++failures;
    }

    // criterion 13: identical seeds give byte-identical reports
    {
        gcp::SuiteConfig det_cfg;
        det_cfg.seed = 1;
        std::string a = gcp::run_suite("all", det_cfg).to_json(false);
        std::string b = gcp::run_suite("all", det_cfg).to_json(false);
        bool pass = a == b;
        std::printf("%s  13  repeated runs with one seed emit identical reports "
                    "(2 checks, 0 ms)%s\n",
                    pass ? "PASS" : "FAIL", pass ? "" : " -- reports differ");
        if (!pass) ++failures;
    }

    return failures == 0 ? 0 : 1;
}
