#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gcpoly/errors.hpp"
#include "gcpoly/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gcpoly: characteristic-polynomial verification toolkit"};
    app.require_subcommand(1);

    gcp::SuiteConfig cfg;
    std::string suite = "all";
    std::string out_path;
    std::string word_text;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name, or 'all'")
        ->envname("GCPOLY_SUITE")
        ->check(CLI::IsMember(gcp::suite_names()));
    verify->add_option("--seed", cfg.seed, "random seed")->envname("GCPOLY_SEED");
    verify->add_option("--r", cfg.r, "cyclic order r")->envname("GCPOLY_R");
    verify->add_option("--p", cfg.p, "divisor p of r")->envname("GCPOLY_P");
    verify->add_option("--n", cfg.n, "rank n")->envname("GCPOLY_N");
    verify->add_option("--roots", cfg.roots, "root system preset (A1, A2, B2)")
        ->envname("GCPOLY_ROOTS");
    verify->add_option("--out", out_path, "write the JSON report here instead of stdout")
        ->envname("GCPOLY_OUT");
    verify->add_option("--tol", cfg.char_tol, "numeric comparison tolerance")
        ->envname("GCPOLY_TOL");
    verify->add_option("--trials", cfg.trials, "evaluation points per identity test")
        ->envname("GCPOLY_TRIALS");
    verify->add_flag("--timings", cfg.timings,
                     "real per-check durations in the report (breaks byte determinism)")
        ->envname("GCPOLY_TIMINGS");

    CLI::App* explain = app.add_subcommand("explain", "echelonize one word and show the trace");
    explain->add_option("word", word_text, "word such as 's1 t2 t2 s1'")->required();
    explain->add_option("--r", cfg.r, "cyclic order r")->envname("GCPOLY_R");
    explain->add_option("--p", cfg.p, "divisor p of r")->envname("GCPOLY_P");
    explain->add_option("--n", cfg.n, "rank n")->envname("GCPOLY_N");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            gcp::SuiteReport report = gcp::run_suite(suite, cfg);
            std::string text = report.to_json(cfg.timings);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream os(out_path, std::ios::binary);
                if (!os) throw gcp::ConfigError("cannot open '" + out_path + "' for writing");
                os << text;
            }
            return report.all_pass() ? 0 : 1;
        }
        std::cout << gcp::explain_word(word_text, gcp::GroupDescriptor(cfg.r, cfg.p, cfg.n));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
