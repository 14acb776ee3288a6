#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace rectfp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { Eq, Le, Ge };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::Ge;
  double rhs = 0.0;
  std::string label;
};

/// minimize objective·x subject to rows and lower <= x <= upper.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> rows;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> var_names;

  /// Adds a variable with bounds [lo, hi] and objective coefficient `cost`,
  /// widening every existing row. Returns its index.
  std::size_t add_variable(double lo, double hi, double cost, std::string name = {});
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  /// Sum of artificial variables left at the end of phase 1. Positive only
  /// for infeasible programs.
  double infeasibility = 0.0;
  std::size_t pivots = 0;
};

struct LpOptions {
  double feasibility_tol = 1e-7;
  double pivot_tol = 1e-9;
  std::size_t max_pivots = 100000;
};

/// Throws std::invalid_argument for dimension mismatches, NaN data or
/// crossed bounds.
void check_well_formed(const LinearProgram& lp);

/// Dense two-phase primal simplex with Bland's rule. Deterministic.
LpOutcome solve_lp(const LinearProgram& lp, const LpOptions& options = {});

/// Largest violation of any row or bound by `x`.
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

/// Plain-text dump: objective, one line per row, then bounds.
std::string to_text(const LinearProgram& lp);

}  // namespace rectfp
