#include "rectfp/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rectfp {

std::size_t LinearProgram::add_variable(double lo, double hi, double cost, std::string name) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  var_names.push_back(name.empty() ? "x" + std::to_string(num_vars) : std::move(name));
  for (auto& row : rows) row.coeffs.push_back(0.0);
  return num_vars++;
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

void check_well_formed(const LinearProgram& lp) {
  const std::size_t m = lp.num_vars;
  if (lp.objective.size() != m) throw std::invalid_argument("objective length differs from num_vars");
  if (lp.lower.size() != m || lp.upper.size() != m) throw std::invalid_argument("bounds length differs from num_vars");
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    if (row.coeffs.size() != m) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(row.coeffs.size()) +
                                  " coefficients, expected " + std::to_string(m));
    }
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("row " + std::to_string(i) + " has a non-finite rhs");
    for (double a : row.coeffs) {
      if (!std::isfinite(a)) throw std::invalid_argument("row " + std::to_string(i) + " has a non-finite coefficient");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!std::isfinite(lp.objective[j])) throw std::invalid_argument("non-finite objective coefficient");
    if (std::isnan(lp.lower[j]) || std::isnan(lp.upper[j]) || lp.lower[j] > lp.upper[j] ||
        lp.lower[j] == kInfinity || lp.upper[j] == -kInfinity) {
      throw std::invalid_argument("variable " + std::to_string(j) + " has invalid bounds");
    }
  }
}

namespace {

// x_j = shift + sign * y[col] (+ the negative part for free variables).
struct Substitution {
  double shift = 0.0;
  double sign = 1.0;
  std::size_t col = 0;
  bool free = false;
  std::size_t neg_col = 0;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

  void drop_row(std::size_t r) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

enum class PhaseResult { Optimal, Unbounded, PivotLimit };

// Minimizes cost·y over the tableau with Bland's rule. `allowed` masks the
// columns that may enter the basis.
PhaseResult run_simplex(Tableau& t, std::vector<std::size_t>& basis, const std::vector<double>& cost,
                        const std::vector<bool>& allowed, const LpOptions& opt, std::size_t& pivots) {
  const std::size_t n = t.cols();
  std::vector<double> reduced(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = cost[j];
      for (std::size_t i = 0; i < t.rows(); ++i) d -= cost[basis[i]] * t.at(i, j);
      reduced[j] = d;
    }
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (allowed[j] && reduced[j] < -opt.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter == n) return PhaseResult::Optimal;

    double best = kInfinity;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a > opt.pivot_tol) best = std::min(best, t.rhs(i) / a);
    }
    if (best == kInfinity) return PhaseResult::Unbounded;
    // Ratio ties go to the smallest basic index (Bland).
    std::size_t leave = t.rows();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= opt.pivot_tol || t.rhs(i) / a > best + opt.pivot_tol) continue;
      if (leave == t.rows() || basis[i] < basis[leave]) leave = i;
    }
    if (++pivots > opt.max_pivots) return PhaseResult::PivotLimit;
    t.pivot(leave, enter);
    basis[leave] = enter;
    if (t.rhs(leave) < 0.0 && t.rhs(leave) > -opt.feasibility_tol) t.rhs(leave) = 0.0;
  }
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp, const LpOptions& opt) {
  check_well_formed(lp);
  const std::size_t m = lp.num_vars;

  // Shift every variable onto y >= 0.
  std::vector<Substitution> subs(m);
  std::size_t ncols = 0;
  struct UpperRow {
    std::size_t col;
    double span;
  };
  std::vector<UpperRow> upper_rows;
  for (std::size_t j = 0; j < m; ++j) {
    Substitution& s = subs[j];
    const double lo = lp.lower[j];
    const double hi = lp.upper[j];
    if (std::isfinite(lo)) {
      s.shift = lo;
      s.col = ncols++;
      if (std::isfinite(hi)) upper_rows.push_back({s.col, hi - lo});
    } else if (std::isfinite(hi)) {
      s.shift = hi;
      s.sign = -1.0;
      s.col = ncols++;
    } else {
      s.free = true;
      s.col = ncols++;
      s.neg_col = ncols++;
    }
  }
  const std::size_t structural = ncols;

  struct StdRow {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<StdRow> std_rows;
  for (const auto& row : lp.rows) {
    StdRow sr{std::vector<double>(structural, 0.0), row.relation, row.rhs};
    for (std::size_t j = 0; j < m; ++j) {
      const double a = row.coeffs[j];
      if (a == 0.0) continue;
      sr.b -= a * subs[j].shift;
      sr.a[subs[j].col] += a * subs[j].sign;
      if (subs[j].free) sr.a[subs[j].neg_col] -= a;
    }
    std_rows.push_back(std::move(sr));
  }
  for (const auto& ur : upper_rows) {
    StdRow sr{std::vector<double>(structural, 0.0), Relation::Le, ur.span};
    sr.a[ur.col] = 1.0;
    std_rows.push_back(std::move(sr));
  }
  for (auto& sr : std_rows) {
    if (sr.b < 0.0) {
      for (double& a : sr.a) a = -a;
      sr.b = -sr.b;
      if (sr.rel == Relation::Le) {
        sr.rel = Relation::Ge;
      } else if (sr.rel == Relation::Ge) {
        sr.rel = Relation::Le;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& sr : std_rows) {
    if (sr.rel != Relation::Eq) ++slack_count;
    if (sr.rel != Relation::Le) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t total = first_artificial + artificial_count;

  Tableau t(std_rows.size(), total);
  std::vector<std::size_t> basis(std_rows.size());
  std::size_t next_slack = structural;
  std::size_t next_art = first_artificial;
  double rhs_scale = 1.0;
  for (std::size_t i = 0; i < std_rows.size(); ++i) {
    const auto& sr = std_rows[i];
    for (std::size_t c = 0; c < structural; ++c) t.at(i, c) = sr.a[c];
    t.rhs(i) = sr.b;
    rhs_scale = std::max(rhs_scale, std::abs(sr.b));
    if (sr.rel == Relation::Le) {
      t.at(i, next_slack) = 1.0;
      basis[i] = next_slack++;
    } else {
      if (sr.rel == Relation::Ge) t.at(i, next_slack++) = -1.0;
      t.at(i, next_art) = 1.0;
      basis[i] = next_art++;
    }
  }

  LpOutcome out;
  std::vector<bool> allowed(total, true);

  if (artificial_count > 0) {
    std::vector<double> phase1(total, 0.0);
    for (std::size_t c = first_artificial; c < total; ++c) phase1[c] = 1.0;
    const auto r = run_simplex(t, basis, phase1, allowed, opt, out.pivots);
    if (r == PhaseResult::PivotLimit) throw std::runtime_error("simplex pivot limit exceeded in phase 1");

    double residual = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (basis[i] >= first_artificial) residual += t.rhs(i);
    }
    if (residual > opt.feasibility_tol * rhs_scale) {
      out.status = LpStatus::Infeasible;
      out.infeasibility = residual;
      return out;
    }

    // Pivot remaining (zero-valued) artificials out, dropping redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
      if (basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(i, c)) > opt.pivot_tol) {
          col = c;
          break;
        }
      }
      if (col == first_artificial) {
        t.drop_row(i);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        basis[i] = col;
        ++i;
      }
    }
    for (std::size_t c = first_artificial; c < total; ++c) allowed[c] = false;
  }

  std::vector<double> cost(total, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    cost[subs[j].col] += lp.objective[j] * subs[j].sign;
    if (subs[j].free) cost[subs[j].neg_col] -= lp.objective[j];
  }
  const auto r = run_simplex(t, basis, cost, allowed, opt, out.pivots);
  if (r == PhaseResult::PivotLimit) throw std::runtime_error("simplex pivot limit exceeded in phase 2");
  if (r == PhaseResult::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  std::vector<double> y(total, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) y[basis[i]] = std::max(0.0, t.rhs(i));
  out.x.assign(m, 0.0);
  out.objective_value = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double v = subs[j].shift + subs[j].sign * y[subs[j].col];
    if (subs[j].free) v -= y[subs[j].neg_col];
    out.x[j] = v;
    out.objective_value += lp.objective[j] * v;
  }
  out.status = LpStatus::Optimal;
  return out;
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& row : lp.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += row.coeffs[j] * x[j];
    double v = 0.0;
    switch (row.relation) {
      case Relation::Eq:
        v = std::abs(lhs - row.rhs);
        break;
      case Relation::Le:
        v = lhs - row.rhs;
        break;
      case Relation::Ge:
        v = row.rhs - lhs;
        break;
    }
    worst = std::max(worst, v);
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    worst = std::max(worst, lp.lower[j] - x[j]);
    worst = std::max(worst, x[j] - lp.upper[j]);
  }
  return worst;
}

std::string to_text(const LinearProgram& lp) {
  std::ostringstream out;
  out.precision(12);
  auto name = [&](std::size_t j) { return j < lp.var_names.size() ? lp.var_names[j] : "x" + std::to_string(j); };
  auto terms = [&](const std::vector<double>& coeffs) {
    std::ostringstream t;
    t.precision(12);
    bool first = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const double a = coeffs[j];
      if (a == 0.0) continue;
      t << (a < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (std::abs(a) != 1.0) t << std::abs(a) << ' ';
      t << name(j);
      first = false;
    }
    if (first) t << '0';
    return t.str();
  };

  out << "minimize " << terms(lp.objective) << '\n';
  out << "subject to\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    const char* rel = row.relation == Relation::Eq ? "=" : row.relation == Relation::Le ? "<=" : ">=";
    out << "  " << (row.label.empty() ? "r" + std::to_string(i) : row.label) << ": " << terms(row.coeffs) << ' '
        << rel << ' ' << row.rhs << '\n';
  }
  out << "bounds\n";
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    out << "  " << lp.lower[j] << " <= " << name(j) << " <= ";
    if (std::isinf(lp.upper[j])) {
      out << "inf";
    } else {
      out << lp.upper[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rectfp
