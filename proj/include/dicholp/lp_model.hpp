#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dicholp/errors.hpp"

namespace dicholp {

/// Dense row-major matrix. Desk-scale problems only, so no sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return v_[idx(i, j)]; }
    double operator()(int i, int j) const { return v_[idx(i, j)]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// max c.x  subject to  A x <= b, x >= 0.
///
/// This one canonical sense is used everywhere inside the library;
/// minimize inputs are negated at the I/O layer.
struct LinearProgram {
    int n = 0;  // variables
    int m = 0;  // rows
    std::vector<double> c;
    Matrix A;
    std::vector<double> b;
    std::string name;

    LinearProgram() = default;

    LinearProgram(std::vector<double> c_, Matrix A_, std::vector<double> b_, std::string name_ = "")
        : n(static_cast<int>(c_.size())),
          m(static_cast<int>(b_.size())),
          c(std::move(c_)),
          A(std::move(A_)),
          b(std::move(b_)),
          name(std::move(name_)) {
        if (n < 1) throw DimensionError("LinearProgram: need at least one variable");
        if (A.rows() != m || A.cols() != n)
            throw DimensionError("LinearProgram: A must be " + std::to_string(m) + "x" + std::to_string(n));
        for (double v : c)
            if (!std::isfinite(v)) throw std::invalid_argument("LinearProgram: non-finite objective entry");
        for (double v : b)
            if (!std::isfinite(v)) throw std::invalid_argument("LinearProgram: non-finite rhs entry");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (!std::isfinite(A(i, j))) throw std::invalid_argument("LinearProgram: non-finite matrix entry");
    }

    bool operator==(const LinearProgram&) const = default;
};

/// Equality form A_eq (x, s) = b with one slack per row.
/// Columns n .. n+m-1 of A_eq are the identity by construction.
struct StandardFormLP {
    Matrix A_eq;                 // m x (n + m)
    std::vector<double> b;       // length m
    std::vector<double> c_ext;   // length n + m, zero on slack columns
    int original_n = 0;
    std::vector<int> slack_index_of_row;  // row -> slack column
};

inline StandardFormLP to_standard_form(const LinearProgram& lp) {
    StandardFormLP sf;
    sf.original_n = lp.n;
    sf.b = lp.b;
    sf.A_eq = Matrix(lp.m, lp.n + lp.m);
    sf.c_ext.assign(static_cast<std::size_t>(lp.n + lp.m), 0.0);
    for (int j = 0; j < lp.n; ++j) sf.c_ext[static_cast<std::size_t>(j)] = lp.c[static_cast<std::size_t>(j)];
    sf.slack_index_of_row.resize(static_cast<std::size_t>(lp.m));
    for (int i = 0; i < lp.m; ++i) {
        for (int j = 0; j < lp.n; ++j) sf.A_eq(i, j) = lp.A(i, j);
        sf.A_eq(i, lp.n + i) = 1.0;
        sf.slack_index_of_row[static_cast<std::size_t>(i)] = lp.n + i;
    }
    return sf;
}

inline double evaluate_objective(const LinearProgram& lp, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != lp.n)
        throw DimensionError("evaluate_objective: point has wrong dimension");
    return dot(lp.c, x);
}

/// (Ax)_i <= b_i + tol for every row and x_j >= -tol for every variable.
inline bool check_feasible_point(const LinearProgram& lp, const std::vector<double>& x, double tol) {
    if (static_cast<int>(x.size()) != lp.n)
        throw DimensionError("check_feasible_point: point has wrong dimension");
    for (const double& xj : x)
        if (xj < -tol) return false;
    for (int i = 0; i < lp.m; ++i) {
        double row = 0.0;
        for (int j = 0; j < lp.n; ++j) row += lp.A(i, j) * x[static_cast<std::size_t>(j)];
        if (row > lp.b[static_cast<std::size_t>(i)] + tol) return false;
    }
    return true;
}

/// Level set { x : coeffs.x = level } of a linear functional.
struct Hyperplane {
    std::vector<double> coeffs;
    double level = 0.0;
    bool degenerate = false;  // all-zero functional must be flagged explicitly

    Hyperplane(std::vector<double> coeffs_, double level_, bool degenerate_ = false)
        : coeffs(std::move(coeffs_)), level(level_), degenerate(degenerate_) {
        bool all_zero = true;
        for (double v : coeffs)
            if (v != 0.0) all_zero = false;
        if (all_zero && !degenerate)
            throw std::invalid_argument("Hyperplane: all-zero functional without degenerate flag");
    }

    bool contains(const std::vector<double>& x, double tol) const {
        if (x.size() != coeffs.size()) throw DimensionError("Hyperplane::contains: wrong dimension");
        return std::abs(dot(coeffs, x) - level) <= tol;
    }
};

/// The objective level set { x : c.x = alpha } of a program.
inline Hyperplane objective_hyperplane(const LinearProgram& lp, double alpha) {
    bool all_zero = true;
    for (double v : lp.c)
        if (v != 0.0) all_zero = false;
    return Hyperplane(lp.c, alpha, all_zero);
}

}  // namespace dicholp
