#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "pellrep/bounds.hpp"
#include "pellrep/pell.hpp"
#include "pellrep/records.hpp"
#include "pellrep/repdigit.hpp"
#include "pellrep/search.hpp"
#include "pellrep/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

pellrep::Int parse_int(const std::string& text, const char* what) {
    pellrep::Int value;
    if (value.set_str(text, 10) != 0)
        throw pellrep::precondition_error(std::string(what) + ": not a decimal integer");
    return value;
}

int emit_suite(const pellrep::SuiteReport& report) {
    for (const auto& line : report.checks)
        std::cout << pellrep::jsonl_line(pellrep::verify_record(report.suite, line));
    for (const auto& evidence : report.falsifications)
        std::cout << pellrep::jsonl_line(pellrep::verify_record(report.suite, evidence));
    return report.ok() ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pell equation / repdigit toolkit"};
    app.require_subcommand(1);

    // pell --d D --n N
    std::string pell_d;
    unsigned long pell_n = 1;
    auto* pell_cmd = app.add_subcommand("pell", "n-th solution of X^2 - d Y^2 = 1");
    pell_cmd->add_option("--d", pell_d, "modulus d (nonsquare, >= 2)")->required();
    pell_cmd->add_option("--n", pell_n, "solution index (default 1)");

    // repdigit --value N --base B
    std::string rep_value;
    unsigned long rep_base = 10;
    auto* rep_cmd = app.add_subcommand("repdigit", "repdigit decomposition of an integer");
    rep_cmd->add_option("--value", rep_value, "integer to decompose")->required();
    rep_cmd->add_option("--base", rep_base, "digit base (default 10)");

    // search
    pellrep::SearchConfig config;
    bool classify = false;
    std::string format = "jsonl";
    auto* search_cmd =
        app.add_subcommand("search", "scan moduli for repdigit X-coordinates");
    search_cmd->add_option("--base", config.base, "digit base (default 10)");
    search_cmd->add_option("--d-max", config.d_max, "largest modulus scanned")->required();
    search_cmd->add_option("--n-max", config.n_max, "largest solution index (default 8)");
    search_cmd->add_option("--m-cap", config.m_cap, "longest digit string (default 64)");
    search_cmd->add_flag("--include-m1,!--no-include-m1", config.include_m1,
                         "count single-digit hits (default on)");
    search_cmd->add_option("--shards", config.shards, "worker count (default 1)");
    search_cmd->add_flag("--squarefree-only", config.squarefree_only,
                         "scan squarefree moduli only");
    search_cmd->add_flag("--classify", classify,
                         "annotate hits with branch and reduced-instance data");
    search_cmd->add_option("--format", format, "jsonl or csv (default jsonl)")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    // verify <suite>
    std::string suite;
    unsigned long v_base = 10, v_base_max = 0, v_d_max = 0, v_n_max = 0, v_m_max = 0;
    unsigned long v_k_min = 13, v_k_max = 25, v_m = 100, v_bound_base_max = 20;
    std::string v_x_max = "10000", v_y_max = "100";
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("suite", suite,
                     "one of: even-case, gcd, taylor, lemma3, primitive, elliptic, brackets")
        ->required();
    verify_cmd->add_option("--base", v_base, "single base (even-case, taylor)");
    verify_cmd->add_option("--base-max", v_base_max, "base ceiling (gcd, lemma3, elliptic, brackets)");
    verify_cmd->add_option("--d-max", v_d_max, "modulus ceiling");
    verify_cmd->add_option("--n-max", v_n_max, "index ceiling");
    verify_cmd->add_option("--m-max", v_m_max, "digit-length ceiling");
    verify_cmd->add_option("--k-min", v_k_min, "first index checked (primitive)");
    verify_cmd->add_option("--k-max", v_k_max, "last index checked (primitive)");
    verify_cmd->add_option("--x-max", v_x_max, "solution window (elliptic)");
    verify_cmd->add_option("--y-max", v_y_max, "solution window (elliptic)");
    verify_cmd->add_option("--m", v_m, "digit length for the bracket checks (default 100)");
    verify_cmd->add_option("--bound-base-max", v_bound_base_max,
                           "base ceiling for the constant-magnitude scan (elliptic)");

    // bounds --base B
    unsigned long bounds_base = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "derived per-base bound report");
    bounds_cmd->add_option("--base", bounds_base, "digit base")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*pell_cmd) {
            const pellrep::Int d = parse_int(pell_d, "pell --d");
            const pellrep::PellOrbit orbit = pellrep::fundamental_solution(d);
            const pellrep::PellPair pair = pellrep::nth_solution(orbit, pell_n);
            std::cout << pellrep::jsonl_line(pellrep::pell_record(pair));
            return kExitOk;
        }

        if (*rep_cmd) {
            const pellrep::Int value = parse_int(rep_value, "repdigit --value");
            const auto form = pellrep::as_repdigit(value, rep_base);
            std::cout << pellrep::jsonl_line(pellrep::repdigit_record(value, rep_base, form));
            return kExitOk;
        }

        if (*search_cmd) {
            if (classify && format == "csv")
                throw pellrep::precondition_error(
                    "search: --classify output is jsonl-only");
            const pellrep::SearchReport report = pellrep::search(config);
            int exit_code = kExitOk;
            if (classify) {
                const pellrep::ClassifiedReport classified = pellrep::classify_report(report);
                for (const auto& hit : classified.classified)
                    std::cout << pellrep::jsonl_line(pellrep::hit_record(hit));
                for (const auto& evidence : classified.falsifications)
                    std::cout << pellrep::jsonl_line(
                        pellrep::verify_record("search", evidence));
                if (!classified.ok()) exit_code = kExitFalsified;
            } else if (format == "csv") {
                std::cout << pellrep::hits_csv(report.multi_hit);
            } else {
                for (const auto& hit : report.multi_hit)
                    std::cout << pellrep::jsonl_line(pellrep::hit_record(hit));
            }
            std::cerr << "scanned=" << report.d_scanned
                      << " with_hits=" << report.d_with_hits
                      << " total_hits=" << report.total_hits
                      << " multi_hit=" << report.multi_hit.size() << "\n";
            return exit_code;
        }

        if (*verify_cmd) {
            auto pick = [](unsigned long flag, unsigned long fallback) {
                return flag == 0 ? fallback : flag;
            };
            if (suite == "even-case")
                return emit_suite(pellrep::run_even_case_suite(v_base, pick(v_d_max, 300),
                                                               pick(v_n_max, 8)));
            if (suite == "gcd")
                return emit_suite(pellrep::run_gcd_suite(pick(v_base_max, 12),
                                                         pick(v_m_max, 12),
                                                         pick(v_d_max, 50),
                                                         pick(v_n_max, 13)));
            if (suite == "taylor")
                return emit_suite(pellrep::run_taylor_suite(v_base, pick(v_m_max, 4),
                                                            pick(v_n_max, 9)));
            if (suite == "lemma3")
                return emit_suite(
                    pellrep::run_lemma3_suite(pick(v_base_max, 12), pick(v_n_max, 9)));
            if (suite == "primitive")
                return emit_suite(
                    pellrep::run_primitive_suite(pick(v_d_max, 10), v_k_min, v_k_max));
            if (suite == "elliptic")
                return emit_suite(pellrep::run_elliptic_suite(
                    pick(v_base_max, 10), parse_int(v_x_max, "verify --x-max"),
                    parse_int(v_y_max, "verify --y-max"), v_bound_base_max));
            if (suite == "brackets")
                return emit_suite(pellrep::run_bracket_suite(pick(v_base_max, 10), v_m));
            throw pellrep::precondition_error("verify: unknown suite '" + suite + "'");
        }

        if (*bounds_cmd) {
            std::cout << pellrep::jsonl_line(
                pellrep::bound_record(pellrep::bound_report(bounds_base)));
            return kExitOk;
        }
    } catch (const pellrep::falsification_error& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const pellrep::identity_violation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
