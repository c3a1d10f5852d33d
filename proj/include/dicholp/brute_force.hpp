#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicholp/errors.hpp"
#include "dicholp/feasibility_oracle.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/simplex.hpp"
#include "dicholp/tolerances.hpp"

namespace dicholp {

namespace brute_detail {

constexpr int kMaxVars = 6;
constexpr double kSingularTol = 1e-10;

// Solve the n-by-n system M x = r by Gaussian elimination with partial
// pivoting; nullopt when a pivot falls below the singularity threshold.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> M,
                                                       std::vector<double> r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(M[i][k]) > std::abs(M[p][k])) p = i;
        if (std::abs(M[p][k]) <= kSingularTol) return std::nullopt;
        std::swap(M[p], M[k]);
        std::swap(r[p], r[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = M[i][k] / M[k][k];
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
            r[i] -= f * r[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double s = r[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= M[k][j] * x[j];
        x[k] = s / M[k][k];
    }
    return x;
}

// Visit every n-subset of {0, ..., total-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int total, int pick, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int i = pick - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - pick + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < pick; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline void require_small(const LinearProgram& lp) {
    if (lp.n > kMaxVars)
        throw InstanceTooLargeError("vertex enumeration limited to " + std::to_string(kMaxVars) +
                                    " variables, got " + std::to_string(lp.n));
}

}  // namespace brute_detail

/// Enumerate candidate vertices of {Ax <= b, x >= 0} by intersecting every
/// choice of n active constraints (rows of A plus coordinate planes) and
/// keeping the intersections that satisfy the full system.
inline std::vector<std::vector<double>> enumerate_feasible_vertices(const LinearProgram& lp,
                                                                    double tol = 1e-7) {
    using namespace brute_detail;
    require_small(lp);

    const int n = lp.n;
    const int m = lp.m;
    std::vector<std::vector<double>> vertices;

    // Constraint i < m is row i of A; constraint m + j is x_j = 0.
    for_each_subset(m + n, n, [&](const std::vector<int>& active) {
        std::vector<std::vector<double>> M(static_cast<std::size_t>(n),
                                           std::vector<double>(static_cast<std::size_t>(n), 0.0));
        std::vector<double> r(static_cast<std::size_t>(n), 0.0);
        for (int k = 0; k < n; ++k) {
            const int a = active[static_cast<std::size_t>(k)];
            if (a < m) {
                for (int j = 0; j < n; ++j) M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = lp.A(a, j);
                r[static_cast<std::size_t>(k)] = lp.b[static_cast<std::size_t>(a)];
            } else {
                M[static_cast<std::size_t>(k)][static_cast<std::size_t>(a - m)] = 1.0;
            }
        }
        auto x = solve_square(std::move(M), std::move(r));
        if (!x || !check_feasible_point(lp, *x, tol)) return;
        for (const auto& seen : vertices) {
            double d = 0.0;
            for (std::size_t j = 0; j < seen.size(); ++j) d = std::max(d, std::abs(seen[j] - (*x)[j]));
            if (d <= 1e-9) return;
        }
        vertices.push_back(std::move(*x));
    });
    return vertices;
}

/// Exhaustive optimum for small instances: best objective value over all
/// feasible vertices, with unboundedness certified by a separate ray check.
/// Intended as an oracle to cross-check the other solvers, not for real use.
inline SimplexResult brute_force_optimum(const LinearProgram& lp, const ToleranceSet& tol = {}) {
    brute_detail::require_small(lp);
    tol.validate();

    SimplexResult result;
    if (certify_unbounded(lp, tol)) {
        if (!find_feasible_point(lp, tol).feasible) {
            result.status = SolveStatus::Infeasible;
            return result;
        }
        result.status = SolveStatus::Unbounded;
        return result;
    }

    const auto vertices = enumerate_feasible_vertices(lp, tol.tol_feas);
    if (vertices.empty()) {
        if (find_feasible_point(lp, tol).feasible) {
            // Feasible but vertex-free can only happen through degeneracy at
            // this size; fall back rather than misreport.
            return simplex_solve(lp, tol);
        }
        result.status = SolveStatus::Infeasible;
        return result;
    }

    std::size_t best = 0;
    double best_val = dot(lp.c, vertices[0]);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const double v = dot(lp.c, vertices[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    result.status = SolveStatus::Optimal;
    result.value = best_val;
    result.x_star = vertices[best];
    return result;
}

}  // namespace dicholp
