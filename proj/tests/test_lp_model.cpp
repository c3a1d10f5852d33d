#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "dicholp/errors.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/random_instance.hpp"

using namespace dicholp;

namespace {

Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix a(m, n);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (double v : row) a(i, j++) = v;
        ++i;
    }
    return a;
}

// Independent 2x2 solve used as the in-test oracle for the 14/5 vertex.
std::vector<double> cramer2(double a11, double a12, double a21, double a22, double r1, double r2) {
    const double det = a11 * a22 - a12 * a21;
    return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix a(2, 3, 0.5);
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 3);
    REQUIRE(a(1, 2) == 0.5);
    a(0, 0) = -1.0;
    Matrix b = a;
    REQUIRE(a == b);
    b(0, 0) = 2.0;
    REQUIRE(!(a == b));
}

TEST_CASE("standard form appends one slack per row") {
    LinearProgram lp({1.0}, make_matrix({{1.0}}), {1.0});
    const StandardFormLP sf = to_standard_form(lp);
    REQUIRE(sf.A_eq.rows() == 1);
    REQUIRE(sf.A_eq.cols() == 2);
    REQUIRE(sf.A_eq(0, 0) == 1.0);
    REQUIRE(sf.A_eq(0, 1) == 1.0);
    REQUIRE(sf.b == std::vector<double>{1.0});
    REQUIRE(sf.c_ext == std::vector<double>{1.0, 0.0});
    REQUIRE(sf.original_n == 1);
    REQUIRE(sf.slack_index_of_row == std::vector<int>{1});
}

TEST_CASE("standard form with no constraints") {
    LinearProgram lp({1.0, -2.0}, Matrix(0, 2), {});
    const StandardFormLP sf = to_standard_form(lp);
    REQUIRE(sf.A_eq.rows() == 0);
    REQUIRE(sf.c_ext == lp.c);
    REQUIRE(sf.b.empty());
}

TEST_CASE("standard form identity block") {
    LinearProgram lp({1.0, 1.0}, make_matrix({{1.0, 2.0}, {3.0, 1.0}}), {4.0, 6.0});
    const StandardFormLP sf = to_standard_form(lp);
    REQUIRE(sf.A_eq.cols() == 4);
    const double expect[2][4] = {{1, 2, 1, 0}, {3, 1, 0, 1}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE(sf.A_eq(i, j) == expect[i][j]);
    REQUIRE(sf.c_ext == std::vector<double>{1.0, 1.0, 0.0, 0.0});
}

TEST_CASE("standard form conversion preserves identity blocks already present") {
    LinearProgram lp({1.0, 1.0}, make_matrix({{1.0, 2.0}, {3.0, 1.0}}), {4.0, 6.0});
    const StandardFormLP sf = to_standard_form(lp);

    LinearProgram widened(sf.c_ext, sf.A_eq, sf.b);
    const StandardFormLP sf2 = to_standard_form(widened);
    REQUIRE(sf2.A_eq.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            REQUIRE(sf2.A_eq(i, 2 + j) == (i == j ? 1.0 : 0.0));
            REQUIRE(sf2.A_eq(i, 4 + j) == (i == j ? 1.0 : 0.0));
        }
}

TEST_CASE("objective evaluation") {
    LinearProgram lp({1.0, 2.0}, Matrix(0, 2), {});
    REQUIRE(evaluate_objective(lp, {3.0, 4.0}) == 11.0);

    LinearProgram zero({0.0, 0.0}, Matrix(0, 2), {});
    REQUIRE(evaluate_objective(zero, {7.5, -3.25}) == 0.0);

    const auto vertex = cramer2(1, 2, 3, 1, 4, 6);
    LinearProgram corner({1.0, 1.0}, make_matrix({{1.0, 2.0}, {3.0, 1.0}}), {4.0, 6.0});
    REQUIRE_THAT(evaluate_objective(corner, vertex),
                 Catch::Matchers::WithinAbs(14.0 / 5.0, 1e-15));

    REQUIRE_THROWS_AS(evaluate_objective(lp, {1.0}), DimensionError);
}

TEST_CASE("feasible point check") {
    LinearProgram one({1.0}, make_matrix({{1.0}}), {1.0});
    REQUIRE(check_feasible_point(one, {0.5}, 0.0));
    REQUIRE(check_feasible_point(one, {1.0 + 1e-12}, 1e-9));
    REQUIRE(!check_feasible_point(one, {1.1}, 1e-9));
    REQUIRE(!check_feasible_point(one, {-1e-3}, 1e-9));

    LinearProgram two({1.0, 1.0}, make_matrix({{1.0, 2.0}, {3.0, 1.0}}), {4.0, 6.0});
    REQUIRE(!check_feasible_point(two, {2.0, 2.0}, 1e-9));
    REQUIRE(check_feasible_point(two, {1.0, 1.0}, 0.0));
    REQUIRE_THROWS_AS(check_feasible_point(two, {1.0}, 1e-9), DimensionError);
}

TEST_CASE("construction rejects bad input") {
    REQUIRE_THROWS_AS(LinearProgram({}, Matrix(0, 0), {}), DimensionError);
    REQUIRE_THROWS_AS(LinearProgram({1.0}, Matrix(1, 2), {1.0}), DimensionError);
    REQUIRE_THROWS_AS(LinearProgram({1.0}, Matrix(2, 1), {1.0}), DimensionError);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(LinearProgram({nan}, Matrix(0, 1), {}), std::invalid_argument);
    REQUIRE_THROWS_AS(LinearProgram({1.0}, make_matrix({{inf}}), {1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(LinearProgram({1.0}, make_matrix({{1.0}}), {nan}), std::invalid_argument);
}

TEST_CASE("hyperplane invariants and membership") {
    REQUIRE_THROWS_AS(Hyperplane({0.0, 0.0}, 1.0), std::invalid_argument);
    REQUIRE_NOTHROW(Hyperplane({0.0, 0.0}, 0.0, true));

    Hyperplane h({1.0, 1.0}, 2.8);
    REQUIRE(h.contains({1.6, 1.2}, 1e-12));
    REQUIRE(!h.contains({1.0, 1.0}, 1e-9));
    REQUIRE_THROWS_AS(h.contains({1.0}, 1e-9), DimensionError);

    LinearProgram lp({1.0, 1.0}, Matrix(0, 2), {});
    const Hyperplane level = objective_hyperplane(lp, 3.0);
    REQUIRE(level.coeffs == lp.c);
    REQUIRE(level.level == 3.0);
    REQUIRE(!level.degenerate);

    LinearProgram zero({0.0}, Matrix(0, 1), {});
    REQUIRE(objective_hyperplane(zero, 0.0).degenerate);
}

TEST_CASE("standard form roundtrip on random feasible points") {
    std::mt19937_64 gen(20260814);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 5);
        const int m = 1 + static_cast<int>(gen() % 5);
        const LinearProgram lp = generate_random_instance(n, m, gen());
        const StandardFormLP sf = to_standard_form(lp);

        // Walk from the origin along a random nonnegative direction,
        // stopping strictly inside the feasible region.
        std::vector<double> d(static_cast<std::size_t>(n));
        for (double& v : d) v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        double t_max = 1e3;
        for (int i = 0; i < m; ++i) {
            double row_dot = 0.0;
            for (int j = 0; j < n; ++j) row_dot += lp.A(i, j) * d[static_cast<std::size_t>(j)];
            if (row_dot > 0.0) t_max = std::min(t_max, lp.b[static_cast<std::size_t>(i)] / row_dot);
        }
        const double t = 0.9 * t_max * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = t * d[static_cast<std::size_t>(j)];
        REQUIRE(check_feasible_point(lp, x, 1e-9));

        // Slack extension is feasible for the equality system.
        std::vector<double> ext(x);
        ext.resize(static_cast<std::size_t>(n + m));
        for (int i = 0; i < m; ++i) {
            double ax = 0.0;
            for (int j = 0; j < n; ++j) ax += lp.A(i, j) * x[static_cast<std::size_t>(j)];
            ext[static_cast<std::size_t>(sf.slack_index_of_row[static_cast<std::size_t>(i)])] =
                lp.b[static_cast<std::size_t>(i)] - ax;
        }
        for (double v : ext) REQUIRE(v >= -1e-12);
        for (int i = 0; i < m; ++i) {
            double lhs = 0.0;
            for (int j = 0; j < n + m; ++j) lhs += sf.A_eq(i, j) * ext[static_cast<std::size_t>(j)];
            const double scale = std::max(1.0, std::abs(lp.b[static_cast<std::size_t>(i)]));
            REQUIRE(std::abs(lhs - lp.b[static_cast<std::size_t>(i)]) <= 1e-12 * scale);
        }

        // Objective agrees between the two forms, and truncating the
        // extended point recovers a feasible original point.
        const double v_orig = evaluate_objective(lp, x);
        const double v_ext = dot(sf.c_ext, ext);
        REQUIRE(std::abs(v_orig - v_ext) <= 1e-12 * std::max(1.0, std::abs(v_orig)));
        const std::vector<double> trunc(ext.begin(), ext.begin() + n);
        REQUIRE(check_feasible_point(lp, trunc, 1e-9));
        ++checked;
    }
    REQUIRE(checked == 1000);
}
