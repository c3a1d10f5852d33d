#pragma once

// Umbrella header for the solver library. The command-line layer lives in
// dicholp/cli.hpp and is excluded here so library users do not pay for the
// argument-parsing dependency.

#include "dicholp/errors.hpp"
#include "dicholp/tolerances.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/feasibility_oracle.hpp"
#include "dicholp/bisection_solver.hpp"
#include "dicholp/simplex.hpp"
#include "dicholp/brute_force.hpp"
#include "dicholp/lp_io.hpp"
#include "dicholp/random_instance.hpp"
