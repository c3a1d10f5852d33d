#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicholp/bisection_solver.hpp"
#include "dicholp/lp_io.hpp"
#include "dicholp/random_instance.hpp"
#include "dicholp/simplex.hpp"

namespace dicholp {

inline int status_exit_code(SolveStatus st) {
    switch (st) {
        case SolveStatus::Optimal: return 0;
        case SolveStatus::Infeasible: return 2;
        case SolveStatus::Unbounded: return 3;
    }
    return 1;
}

/// Entry point shared by the binary and the in-process CLI tests.
/// `args` excludes the program name. Returns the process exit code:
/// 0 optimal, 1 usage/parse/internal error, 2 infeasible, 3 unbounded,
/// 4 method disagreement in both mode.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LP solver based on dichotomic translation of the objective hyperplane"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "solve an LPT file");
    std::string file;
    std::string method = "bisect";
    std::string bracket = "doubling";
    double tol = ToleranceSet{}.epsilon;
    int max_iter = ToleranceSet{}.max_bisections;
    bool json = false;
    bool trace = false;
    solve_cmd->add_option("file", file, "input file in LPT format")->required();
    solve_cmd->add_option("--method", method, "bisect, simplex, or both")
        ->check(CLI::IsMember({"bisect", "simplex", "both"}));
    solve_cmd->add_option("--tol", tol, "bracket-width stopping tolerance");
    solve_cmd->add_option("--max-iter", max_iter, "bisection iteration cap");
    solve_cmd->add_option("--bracket", bracket,
                          "bracket search: doubling, or paper (halving anchored at the start level)")
        ->check(CLI::IsMember({"doubling", "paper"}));
    solve_cmd->add_flag("--json", json, "emit JSON instead of aligned text");
    solve_cmd->add_flag("--trace", trace, "include the oracle-call trace");

    auto* gen_cmd = app.add_subcommand("gen", "emit a random LPT instance on stdout");
    int gen_n = 0;
    int gen_m = 0;
    long long gen_seed = 0;
    bool gen_neg_b = false;
    gen_cmd->add_option("--n", gen_n, "number of variables")->required();
    gen_cmd->add_option("--m", gen_m, "number of constraints")->required();
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    gen_cmd->add_flag("--allow-negative-b", gen_neg_b, "draw b from [-10,10) instead of [1,10)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*gen_cmd) {
            const auto lp = generate_random_instance(gen_n, gen_m,
                                                     static_cast<std::uint64_t>(gen_seed), gen_neg_b);
            out << "# " << lp.name << "\n" << print_lp_text(lp);
            return 0;
        }

        std::ifstream fin(file);
        if (!fin) {
            err << "error: cannot open '" << file << "'\n";
            return 1;
        }
        ParsedLp parsed;
        try {
            parsed = parse_lp_text(fin);
        } catch (const ParseError& e) {
            err << file << ": " << e.what() << "\n";
            return 1;
        }

        SolverConfig cfg;
        cfg.method = method == "simplex" ? Method::Simplex
                   : method == "both"    ? Method::Both
                                         : Method::Bisect;
        cfg.tolerances.epsilon = tol;
        cfg.tolerances.max_bisections = max_iter;
        cfg.bracket_mode = bracket == "paper" ? BracketMode::PaperHalving : BracketMode::Doubling;
        cfg.output = json ? OutputMode::Json : OutputMode::Human;
        cfg.trace_enabled = trace;
        cfg.tolerances.validate();

        if (cfg.method == Method::Bisect) {
            SolveOutcome outc = solve(parsed.lp, cfg.tolerances, cfg.bracket_mode);
            if (parsed.minimize) negate_objective_value(outc);
            out << write_outcome(outc, cfg);
            if (cfg.output == OutputMode::Json) out << '\n';
            return status_exit_code(outc.status);
        }

        if (cfg.method == Method::Simplex) {
            SimplexResult res = simplex_solve(parsed.lp, cfg.tolerances);
            if (parsed.minimize) negate_objective_value(res);
            out << write_outcome(res, cfg);
            if (cfg.output == OutputMode::Json) out << '\n';
            return status_exit_code(res.status);
        }

        SolveOutcome outc = solve(parsed.lp, cfg.tolerances, cfg.bracket_mode);
        SimplexResult res = simplex_solve(parsed.lp, cfg.tolerances);
        if (parsed.minimize) {
            negate_objective_value(outc);
            negate_objective_value(res);
        }
        out << write_both_outcome(outc, res, cfg);
        if (cfg.output == OutputMode::Json) out << '\n';

        if (outc.status != res.status) return 4;
        if (const auto gap = value_gap(outc, res)) {
            const double allowed = cfg.tolerances.epsilon + 1e-9 * std::abs(*res.value);
            if (*gap > allowed) return 4;
        }
        return status_exit_code(outc.status);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dicholp
