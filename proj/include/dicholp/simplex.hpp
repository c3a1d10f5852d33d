#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dicholp/errors.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/tolerances.hpp"

namespace dicholp {

struct SimplexResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<std::vector<double>> x_star;
    std::optional<double> value;
    int pivots = 0;
};

namespace simplex_detail {

constexpr double kPivTol = 1e-9;

// Dense tableau: one vector<double> per constraint row, rhs last.
using Row = std::vector<double>;
using Tableau = std::vector<Row>;

inline void pivot(Tableau& t, Row& z, std::vector<int>& basis, int pr, int pc) {
    Row& prow = t[static_cast<std::size_t>(pr)];
    const double piv = prow[static_cast<std::size_t>(pc)];
    for (double& v : prow) v /= piv;
    prow[static_cast<std::size_t>(pc)] = 1.0;
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (static_cast<int>(r) == pr) continue;
        const double f = t[r][static_cast<std::size_t>(pc)];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < prow.size(); ++j) t[r][j] -= f * prow[j];
        t[r][static_cast<std::size_t>(pc)] = 0.0;
    }
    const double f = z[static_cast<std::size_t>(pc)];
    if (f != 0.0) {
        for (std::size_t j = 0; j < prow.size(); ++j) z[j] -= f * prow[j];
        z[static_cast<std::size_t>(pc)] = 0.0;
    }
    basis[static_cast<std::size_t>(pr)] = pc;
}

// Minimum-ratio leaving row, ratio ties broken on the smaller basic index.
inline int ratio_row(const Tableau& t, const std::vector<int>& basis, int pc) {
    int best = -1;
    double best_ratio = 0.0;
    const std::size_t rhs = t.empty() ? 0 : t[0].size() - 1;
    for (std::size_t r = 0; r < t.size(); ++r) {
        const double a = t[r][static_cast<std::size_t>(pc)];
        if (a <= kPivTol) continue;
        const double ratio = t[r][rhs] / a;
        if (best < 0 || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && basis[r] < basis[static_cast<std::size_t>(best)]))
        {
            best = static_cast<int>(r);
            best_ratio = ratio;
        }
    }
    return best;
}

}  // namespace simplex_detail

/// Two-phase primal simplex on the dense standard-form tableau, with
/// Bland's rule throughout so degenerate instances terminate.
///
/// Used as the exact baseline that the bisection solver is validated
/// against; it shares no pivoting code with the feasibility oracle.
inline SimplexResult simplex_solve(const LinearProgram& lp, const ToleranceSet& tol = {}) {
    using namespace simplex_detail;
    tol.validate();

    const int n = lp.n;
    const int m = lp.m;
    const StandardFormLP sf = to_standard_form(lp);
    const int base = n + m;

    std::vector<int> art_of_row(static_cast<std::size_t>(m), -1);
    int n_art = 0;
    for (int r = 0; r < m; ++r)
        if (sf.b[static_cast<std::size_t>(r)] < 0.0) art_of_row[static_cast<std::size_t>(r)] = n_art++;
    const int cols = base + n_art;

    Tableau t(static_cast<std::size_t>(m), Row(static_cast<std::size_t>(cols) + 1, 0.0));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const bool negate = art_of_row[static_cast<std::size_t>(r)] >= 0;
        const double sign = negate ? -1.0 : 1.0;
        for (int j = 0; j < base; ++j) t[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = sign * sf.A_eq(r, j);
        t[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] = sign * sf.b[static_cast<std::size_t>(r)];
        if (negate) {
            const int ac = base + art_of_row[static_cast<std::size_t>(r)];
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(ac)] = 1.0;
            basis[static_cast<std::size_t>(r)] = ac;
        } else {
            basis[static_cast<std::size_t>(r)] = sf.slack_index_of_row[static_cast<std::size_t>(r)];
        }
    }

    SimplexResult result;
    const int cap = 10 * (m + cols + 1);

    if (n_art > 0) {
        // Phase I: minimize the artificial sum.
        Row z(static_cast<std::size_t>(cols) + 1, 0.0);
        for (int a = 0; a < n_art; ++a) z[static_cast<std::size_t>(base + a)] = 1.0;
        for (int r = 0; r < m; ++r) {
            if (art_of_row[static_cast<std::size_t>(r)] < 0) continue;
            for (std::size_t j = 0; j < z.size(); ++j) z[j] -= t[static_cast<std::size_t>(r)][j];
        }
        int phase1_pivots = 0;
        for (;;) {
            int pc = -1;
            for (int j = 0; j < cols; ++j)
                if (z[static_cast<std::size_t>(j)] < -kPivTol) { pc = j; break; }
            if (pc < 0) break;
            const int pr = ratio_row(t, basis, pc);
            if (pr < 0) throw IterationLimitError("simplex phase one: missing ratio row");
            pivot(t, z, basis, pr, pc);
            if (++phase1_pivots > cap)
                throw IterationLimitError("simplex phase one: pivot budget exceeded");
        }
        result.pivots += phase1_pivots;

        const double art_sum = -z[static_cast<std::size_t>(cols)];
        if (art_sum > tol.tol_phase1) {
            result.status = SolveStatus::Infeasible;
            return result;
        }

        // Remove artificials from the basis: pivot each one out on any
        // structural column, or drop its row when the row is dependent.
        for (std::size_t r = 0; r < t.size();) {
            if (basis[r] < base) { ++r; continue; }
            int pc = -1;
            for (int j = 0; j < base; ++j)
                if (std::abs(t[r][static_cast<std::size_t>(j)]) > kPivTol) { pc = j; break; }
            if (pc >= 0) {
                pivot(t, z, basis, static_cast<int>(r), pc);
                ++result.pivots;
                ++r;
            } else {
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(r));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

    // Phase II: maximize c_ext over the current basis. Entering columns are
    // structural only; Bland's rule picks the smallest improving index.
    Row z(static_cast<std::size_t>(cols) + 1, 0.0);
    for (int j = 0; j < base; ++j) z[static_cast<std::size_t>(j)] = sf.c_ext[static_cast<std::size_t>(j)];
    for (std::size_t r = 0; r < t.size(); ++r) {
        const int bc = basis[r];
        const double cb = bc < base ? sf.c_ext[static_cast<std::size_t>(bc)] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < z.size(); ++j) z[j] -= cb * t[r][j];
        z[static_cast<std::size_t>(bc)] = 0.0;
    }

    int phase2_pivots = 0;
    for (;;) {
        int pc = -1;
        for (int j = 0; j < base; ++j)
            if (z[static_cast<std::size_t>(j)] > kPivTol) { pc = j; break; }
        if (pc < 0) break;
        const int pr = ratio_row(t, basis, pc);
        if (pr < 0) {
            result.status = SolveStatus::Unbounded;
            return result;
        }
        pivot(t, z, basis, pr, pc);
        if (++phase2_pivots > cap)
            throw IterationLimitError("simplex phase two: pivot budget exceeded");
    }
    result.pivots += phase2_pivots;

    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (std::size_t r = 0; r < t.size(); ++r)
        if (basis[r] < n) x[static_cast<std::size_t>(basis[r])] = t[r].back();

    result.status = SolveStatus::Optimal;
    result.value = dot(lp.c, x);
    result.x_star = std::move(x);
    return result;
}

}  // namespace dicholp
