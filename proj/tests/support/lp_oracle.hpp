#pragma once

#include <optional>
#include <random>

#include "rectfp/lp_solver.hpp"

namespace rectfp::testing {

/// Optimal objective by exhaustive vertex enumeration: every choice of
/// num_vars tight constraints (rows or finite bounds) is solved directly and
/// the best feasible point kept. Valid only when every variable has finite
/// bounds. Empty when the program is infeasible.
std::optional<double> enumerate_vertices(const LinearProgram& lp, double tol = 1e-9);

/// Up to four boxed variables and six rows, every coefficient, bound and
/// right-hand side an integer in [-5, 5]. May be infeasible.
LinearProgram random_boxed_lp(std::mt19937_64& rng);

}  // namespace rectfp::testing
