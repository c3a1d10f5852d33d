#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicholp/lp_model.hpp"

namespace dicholp {

namespace rng_detail {

// Uniform double in [0, 1) built directly from the top 53 bits of the
// generator output. std::uniform_real_distribution is not pinned across
// standard library implementations; golden files need stable streams.
inline double unit_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * unit_double(gen);
}

}  // namespace rng_detail

/// Deterministic random instance: a_ij and c_j uniform in [-10, 10), b_i
/// uniform in [1, 10) so the origin is strictly feasible. Passing
/// allow_negative_b draws b_i from [-10, 10) instead, which exercises the
/// auxiliary-variable path of the feasibility oracle. Draw order is fixed
/// (c, then A row-major, then b); an all-zero objective is redrawn.
inline LinearProgram generate_random_instance(int n, int m, std::uint64_t seed,
                                              bool allow_negative_b = false) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("generate_random_instance: need n >= 1 and m >= 1");

    std::mt19937_64 gen(seed);
    std::vector<double> c(static_cast<std::size_t>(n));
    do {
        for (double& v : c) v = rng_detail::uniform(gen, -10.0, 10.0);
    } while (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; }));

    Matrix A(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng_detail::uniform(gen, -10.0, 10.0);

    std::vector<double> b(static_cast<std::size_t>(m));
    for (double& v : b) v = allow_negative_b ? rng_detail::uniform(gen, -10.0, 10.0)
                                             : rng_detail::uniform(gen, 1.0, 10.0);

    std::string name = "rand-n" + std::to_string(n) + "-m" + std::to_string(m) + "-s" +
                       std::to_string(seed);
    return LinearProgram(std::move(c), std::move(A), std::move(b), std::move(name));
}

}  // namespace dicholp
