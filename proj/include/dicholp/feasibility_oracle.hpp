#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dicholp/errors.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/tolerances.hpp"

namespace dicholp {

/// Verdict of a phase-one feasibility solve.
///
/// When feasible, `witness` is a point of the queried region and
/// `phase1_objective` is the (near-zero) final artificial sum. When
/// infeasible, `phase1_objective` is the positive minimum artificial
/// sum certifying emptiness.
struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<double>> witness;
    double phase1_objective = 0.0;
};

namespace detail {

constexpr double kPivotTol = 1e-9;

// Phase-one tableau over columns [x | slacks | artificials], rhs last.
//
// Rows whose rhs is negative are negated before artificials are added, so
// every rhs starts nonnegative and the starting basis (slacks on untouched
// rows, artificials on negated ones) is feasible for the auxiliary problem.
struct Phase1Tableau {
    Matrix t;                  // rows x (cols + 1)
    std::vector<double> obj;   // reduced costs; obj[cols] carries -objective
    std::vector<int> basis;    // basis[r] = basic column of row r
    int rows = 0;
    int cols = 0;
};

inline void pivot(Phase1Tableau& tb, int pr, int pc) {
    const double piv = tb.t(pr, pc);
    for (int j = 0; j <= tb.cols; ++j) tb.t(pr, j) /= piv;
    tb.t(pr, pc) = 1.0;
    for (int r = 0; r < tb.rows; ++r) {
        if (r == pr) continue;
        const double f = tb.t(r, pc);
        if (f == 0.0) continue;
        for (int j = 0; j <= tb.cols; ++j) tb.t(r, j) -= f * tb.t(pr, j);
        tb.t(r, pc) = 0.0;
    }
    const double f = tb.obj[static_cast<std::size_t>(pc)];
    if (f != 0.0) {
        for (int j = 0; j <= tb.cols; ++j) tb.obj[static_cast<std::size_t>(j)] -= f * tb.t(pr, j);
        tb.obj[static_cast<std::size_t>(pc)] = 0.0;
    }
    tb.basis[static_cast<std::size_t>(pr)] = pc;
}

// Bland's rule: the smallest column index with a negative reduced cost.
inline int entering_column(const Phase1Tableau& tb) {
    for (int j = 0; j < tb.cols; ++j)
        if (tb.obj[static_cast<std::size_t>(j)] < -kPivotTol) return j;
    return -1;
}

// Minimum-ratio row; ratio ties go to the smallest basic variable index.
inline int leaving_row(const Phase1Tableau& tb, int pc) {
    int best = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < tb.rows; ++r) {
        const double a = tb.t(r, pc);
        if (a <= kPivotTol) continue;
        const double ratio = tb.t(r, tb.cols) / a;
        if (best < 0 || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 &&
             tb.basis[static_cast<std::size_t>(r)] < tb.basis[static_cast<std::size_t>(best)])) {
            best = r;
            best_ratio = ratio;
        }
    }
    return best;
}

struct Phase1Outcome {
    bool feasible = false;
    std::vector<double> x;  // length lp.n, valid when feasible
    double artificial_sum = 0.0;
    int pivots = 0;
};

// Decide emptiness of { x : Ax <= b, x >= 0 } by minimizing the artificial
// sum on the standard form. The origin short-circuit covers every instance
// whose rhs is componentwise nonnegative.
inline Phase1Outcome phase1_solve(const LinearProgram& lp, const ToleranceSet& tol) {
    bool origin_ok = true;
    for (double bi : lp.b)
        if (bi < 0.0) origin_ok = false;
    if (origin_ok) {
        Phase1Outcome out;
        out.feasible = true;
        out.x.assign(static_cast<std::size_t>(lp.n), 0.0);
        return out;
    }

    const StandardFormLP sf = to_standard_form(lp);
    const int base = lp.n + lp.m;

    std::vector<int> art_of_row(static_cast<std::size_t>(lp.m), -1);
    int n_art = 0;
    for (int r = 0; r < lp.m; ++r)
        if (sf.b[static_cast<std::size_t>(r)] < 0.0) art_of_row[static_cast<std::size_t>(r)] = n_art++;

    Phase1Tableau tb;
    tb.rows = lp.m;
    tb.cols = base + n_art;
    tb.t = Matrix(tb.rows, tb.cols + 1);
    tb.basis.resize(static_cast<std::size_t>(tb.rows));
    tb.obj.assign(static_cast<std::size_t>(tb.cols) + 1, 0.0);

    for (int r = 0; r < lp.m; ++r) {
        const bool negate = art_of_row[static_cast<std::size_t>(r)] >= 0;
        const double sign = negate ? -1.0 : 1.0;
        for (int j = 0; j < base; ++j) tb.t(r, j) = sign * sf.A_eq(r, j);
        tb.t(r, tb.cols) = sign * sf.b[static_cast<std::size_t>(r)];
        if (negate) {
            const int ac = base + art_of_row[static_cast<std::size_t>(r)];
            tb.t(r, ac) = 1.0;
            tb.basis[static_cast<std::size_t>(r)] = ac;
        } else {
            tb.basis[static_cast<std::size_t>(r)] = sf.slack_index_of_row[static_cast<std::size_t>(r)];
        }
    }

    for (int a = 0; a < n_art; ++a) tb.obj[static_cast<std::size_t>(base + a)] = 1.0;
    // Price out the basic artificials so their reduced costs start at zero.
    for (int r = 0; r < lp.m; ++r) {
        if (art_of_row[static_cast<std::size_t>(r)] < 0) continue;
        for (int j = 0; j <= tb.cols; ++j) tb.obj[static_cast<std::size_t>(j)] -= tb.t(r, j);
    }

    Phase1Outcome out;
    const int cap = 10 * (tb.rows + tb.cols);
    for (;;) {
        const int pc = entering_column(tb);
        if (pc < 0) break;
        const int pr = leaving_row(tb, pc);
        if (pr < 0)
            throw IterationLimitError("phase one: no ratio row (artificial objective cannot be unbounded)");
        pivot(tb, pr, pc);
        if (++out.pivots > cap)
            throw IterationLimitError("phase one: pivot budget of " + std::to_string(cap) + " exceeded");
    }

    out.artificial_sum = -tb.obj[static_cast<std::size_t>(tb.cols)];
    if (out.artificial_sum > tol.tol_phase1) {
        out.feasible = false;
        return out;
    }
    out.feasible = true;
    out.x.assign(static_cast<std::size_t>(lp.n), 0.0);
    for (int r = 0; r < tb.rows; ++r) {
        const int bcol = tb.basis[static_cast<std::size_t>(r)];
        if (bcol < lp.n) out.x[static_cast<std::size_t>(bcol)] = tb.t(r, tb.cols);
    }
    return out;
}

// Canonical program for K intersected with the level set c.x = alpha:
// the equality is split into the opposed inequalities c.x <= alpha and
// -c.x <= -alpha before slack conversion.
inline LinearProgram with_level_rows(const LinearProgram& lp, double alpha) {
    Matrix A2(lp.m + 2, lp.n);
    for (int i = 0; i < lp.m; ++i)
        for (int j = 0; j < lp.n; ++j) A2(i, j) = lp.A(i, j);
    for (int j = 0; j < lp.n; ++j) {
        A2(lp.m, j) = lp.c[static_cast<std::size_t>(j)];
        A2(lp.m + 1, j) = -lp.c[static_cast<std::size_t>(j)];
    }
    std::vector<double> b2 = lp.b;
    b2.push_back(alpha);
    b2.push_back(-alpha);
    return LinearProgram(lp.c, std::move(A2), std::move(b2), lp.name);
}

inline FeasibilityResult to_result(Phase1Outcome&& p) {
    FeasibilityResult res;
    res.feasible = p.feasible;
    res.phase1_objective = p.artificial_sum;
    if (p.feasible) res.witness = std::move(p.x);
    return res;
}

}  // namespace detail

/// Find a point of K = { x : Ax <= b, x >= 0 } or certify K empty.
inline FeasibilityResult find_feasible_point(const LinearProgram& lp, const ToleranceSet& tol = {}) {
    tol.validate();
    return detail::to_result(detail::phase1_solve(lp, tol));
}

/// Decide whether the objective level set { x : c.x = alpha } meets K.
inline FeasibilityResult check_level_feasible(const LinearProgram& lp, double alpha,
                                              const ToleranceSet& tol = {}) {
    tol.validate();
    if (!std::isfinite(alpha)) throw std::invalid_argument("check_level_feasible: alpha must be finite");
    return detail::to_result(detail::phase1_solve(detail::with_level_rows(lp, alpha), tol));
}

/// True iff the ray system { A d <= 0, d >= 0, c.d = 1 } is feasible.
/// Together with K nonempty this certifies sup c.x = +infinity.
inline bool certify_unbounded(const LinearProgram& lp, const ToleranceSet& tol = {}) {
    tol.validate();
    LinearProgram ray(lp.c, lp.A, std::vector<double>(static_cast<std::size_t>(lp.m), 0.0), lp.name);
    return check_level_feasible(ray, 1.0, tol).feasible;
}

}  // namespace dicholp
