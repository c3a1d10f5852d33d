#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dicholp/errors.hpp"
#include "dicholp/feasibility_oracle.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/tolerances.hpp"

namespace dicholp {

/// How the initial bracket around the optimum is located.
///
/// Doubling keeps the highest level already certified feasible as the lower
/// end, which yields the tightest start. PaperHalving anchors the lower end
/// at the starting point's level, so with the origin as starting point the
/// first midpoints reproduce the alpha/2, alpha/4, ... halving sequence.
enum class BracketMode { Doubling, PaperHalving };

/// A feasible objective level (with a point of K attaining it) together
/// with a higher level whose hyperplane was certified to miss K.
struct Bracket {
    double alpha_feasible = 0.0;
    std::vector<double> witness;
    double alpha_infeasible = 0.0;
};

/// One oracle call of the bisection loop: the level probed and the verdict.
struct TraceEntry {
    double alpha = 0.0;
    bool feasible = false;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<std::vector<double>> x_star;
    std::optional<double> value;
    std::optional<double> bracket_width;
    int iterations = 0;
    std::vector<TraceEntry> trace;
};

/// Locate a bracket for the optimum, or classify the program as Infeasible
/// (no starting point) / Unbounded (improving ray exists).
///
/// Starting from a feasible point's level alpha_0, the levels
/// alpha_0 + step, alpha_0 + 2 step, alpha_0 + 4 step, ... with
/// step = max(1, |alpha_0|) are probed until one misses K.
inline std::variant<Bracket, SolveStatus> initial_bracket(const LinearProgram& lp,
                                                          const ToleranceSet& tol = {},
                                                          BracketMode mode = BracketMode::Doubling) {
    tol.validate();
    FeasibilityResult start = find_feasible_point(lp, tol);
    if (!start.feasible) return SolveStatus::Infeasible;
    if (certify_unbounded(lp, tol)) return SolveStatus::Unbounded;

    const double alpha_lo = evaluate_objective(lp, *start.witness);
    Bracket br;
    br.alpha_feasible = alpha_lo;
    br.witness = std::move(*start.witness);

    double step = std::max(1.0, std::abs(alpha_lo));
    for (int k = 0; k < tol.max_doublings; ++k) {
        const double probe = alpha_lo + step;
        FeasibilityResult res = check_level_feasible(lp, probe, tol);
        if (!res.feasible) {
            br.alpha_infeasible = probe;
            return br;
        }
        if (mode == BracketMode::Doubling) {
            br.alpha_feasible = probe;
            br.witness = std::move(*res.witness);
        }
        step *= 2.0;
    }
    throw BracketSearchError("initial_bracket: no infeasible level after " +
                             std::to_string(tol.max_doublings) +
                             " doublings despite bounded certificate");
}

/// Probe the midpoint level and shrink the bracket onto the matching half.
inline Bracket bisect_step(const LinearProgram& lp, const Bracket& br, const ToleranceSet& tol = {}) {
    tol.validate();
    if (!(br.alpha_feasible < br.alpha_infeasible))
        throw std::invalid_argument("bisect_step: bracket endpoints out of order");
    const double mid = 0.5 * (br.alpha_feasible + br.alpha_infeasible);
    FeasibilityResult res = check_level_feasible(lp, mid, tol);
    Bracket next = br;
    if (res.feasible) {
        next.alpha_feasible = mid;
        next.witness = std::move(*res.witness);
    } else {
        next.alpha_infeasible = mid;
    }
    return next;
}

/// Dichotomic solve: bracket the optimal level, then halve the bracket by
/// translating the objective hyperplane until it is narrower than epsilon.
///
/// The width register is halved exactly each step, so the iteration count
/// equals ceil(log2(initial_width / epsilon)) and the reported widths form
/// an exact geometric sequence; the bracket endpoints themselves are the
/// levels the oracle actually certified.
inline SolveOutcome solve(const LinearProgram& lp, const ToleranceSet& tol = {},
                          BracketMode mode = BracketMode::Doubling) {
    tol.validate();
    SolveOutcome out;

    bool zero_objective = true;
    for (double v : lp.c)
        if (v != 0.0) zero_objective = false;
    if (zero_objective) {
        // Bisection on a constant functional is meaningless: any feasible
        // point attains the optimum 0.
        FeasibilityResult fr = find_feasible_point(lp, tol);
        if (!fr.feasible) {
            out.status = SolveStatus::Infeasible;
            return out;
        }
        out.status = SolveStatus::Optimal;
        out.x_star = std::move(fr.witness);
        out.value = 0.0;
        out.bracket_width = 0.0;
        return out;
    }

    std::variant<Bracket, SolveStatus> ib = initial_bracket(lp, tol, mode);
    if (std::holds_alternative<SolveStatus>(ib)) {
        out.status = std::get<SolveStatus>(ib);
        return out;
    }

    Bracket br = std::move(std::get<Bracket>(ib));
    double width = br.alpha_infeasible - br.alpha_feasible;
    while (width > tol.epsilon) {
        if (out.iterations >= tol.max_bisections)
            throw IterationLimitError("solve: max_bisections of " +
                                      std::to_string(tol.max_bisections) + " exceeded");
        Bracket next = bisect_step(lp, br, tol);
        if (next.alpha_feasible != br.alpha_feasible)
            out.trace.push_back({next.alpha_feasible, true});
        else
            out.trace.push_back({next.alpha_infeasible, false});
        br = std::move(next);
        width *= 0.5;
        ++out.iterations;
    }

    out.status = SolveStatus::Optimal;
    out.value = evaluate_objective(lp, br.witness);
    out.x_star = std::move(br.witness);
    out.bracket_width = width;
    return out;
}

}  // namespace dicholp
