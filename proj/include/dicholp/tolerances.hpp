#pragma once

#include <stdexcept>

namespace dicholp {

/// Numeric knobs shared by the solvers.
///
///   epsilon     bracket-width stopping threshold of the bisection loop
///   tol_feas    slack allowed when checking a witness against the constraints
///   tol_eq      slack allowed on the level equality c.x = alpha
///   tol_phase1  artificial-variable sum below which phase one counts as feasible
struct ToleranceSet {
    double epsilon = 1e-6;
    double tol_feas = 1e-7;
    double tol_eq = 1e-7;
    double tol_phase1 = 1e-8;
    int max_bisections = 200;
    int max_doublings = 60;

    void validate() const {
        if (!(epsilon > 0.0) || !(tol_feas > 0.0) || !(tol_eq > 0.0) || !(tol_phase1 > 0.0))
            throw std::invalid_argument("ToleranceSet: tolerances must be strictly positive");
        if (max_bisections < 1) throw std::invalid_argument("ToleranceSet: max_bisections must be >= 1");
        if (max_doublings < 1) throw std::invalid_argument("ToleranceSet: max_doublings must be >= 1");
    }
};

}  // namespace dicholp
