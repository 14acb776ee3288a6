#include "rectfp/dimensioner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rectfp {

std::vector<std::string> check_constraint(const RoomConstraint& c) {
  std::vector<std::string> problems;
  if (!(std::isfinite(c.min_width) && c.min_width > 0.0)) problems.push_back("min_width must be positive");
  if (!(std::isfinite(c.ar_min) && c.ar_min > 0.0)) problems.push_back("ar_min must be positive");
  if (!(std::isfinite(c.ar_max) && c.ar_max >= c.ar_min)) problems.push_back("ar_max must be at least ar_min");
  if (c.max_width && !(*c.max_width >= c.min_width)) problems.push_back("max_width must be at least min_width");
  if (c.max_height && !(*c.max_height > 0.0 && *c.max_height >= c.min_width * c.ar_min)) {
    problems.push_back("max_height must be at least min_width * ar_min");
  }
  return problems;
}

double DoorSpec::width_for(RoomId a, RoomId b) const {
  if (a.is_boundary() || b.is_boundary()) return default_min;
  if (b < a) std::swap(a, b);
  auto it = overrides.find({a, b});
  return it == overrides.end() ? default_min : it->second;
}

void DoorSpec::set_override(RoomId a, RoomId b, double width) {
  if (b < a) std::swap(a, b);
  overrides[{a, b}] = width;
}

std::string to_string(DimensionStatus s) {
  switch (s) {
    case DimensionStatus::Converged:
      return "converged";
    case DimensionStatus::Infeasible:
      return "infeasible";
    case DimensionStatus::NonConvergent:
      return "non_convergent";
  }
  return "unknown";
}

LinearProgram assemble_flow_lp(const StGraph& g, const DimensionMap& min_dim,
                               const std::map<RoomId, std::optional<double>>& max_dim, const DoorSpec& door) {
  LinearProgram lp;
  const auto& edges = g.edges();
  for (const Edge& e : edges) {
    const double cost = e.from == g.source() ? 1.0 : 0.0;
    lp.add_variable(door.width_for(e.from, e.to), kInfinity, cost, to_string(e.from) + "->" + to_string(e.to));
  }

  for (RoomId room : g.rooms()) {
    auto it = min_dim.find(room);
    if (it == min_dim.end()) {
      throw std::invalid_argument("no minimum " + std::string(g.orientation() == Orientation::Vertical ? "width" : "height") +
                                  " for room " + to_string(room));
    }
    const auto in = g.in_edges(room);
    const auto out = g.out_edges(room);

    if (g.conserves_at(room)) {
      LinearConstraint row{std::vector<double>(lp.num_vars, 0.0), Relation::Eq, 0.0, "conserve_" + to_string(room)};
      for (std::size_t i : in) row.coeffs[i] += 1.0;
      for (std::size_t i : out) row.coeffs[i] -= 1.0;
      lp.rows.push_back(std::move(row));
    }

    LinearConstraint lo{std::vector<double>(lp.num_vars, 0.0), Relation::Ge, it->second, "min_" + to_string(room)};
    for (std::size_t i : in) lo.coeffs[i] = 1.0;
    lp.rows.push_back(lo);

    auto mx = max_dim.find(room);
    if (mx != max_dim.end() && mx->second) {
      LinearConstraint hi = lo;
      hi.relation = Relation::Le;
      hi.rhs = *mx->second;
      hi.label = "max_" + to_string(room);
      lp.rows.push_back(std::move(hi));
    }
  }
  return lp;
}

namespace {

// Fixed, irrationally spaced weights for the secondary objective.
double tie_break_weight(RoomId room) {
  const double golden = 0.6180339887498949;
  const double f = room.value * golden;
  return 1.0 + (f - std::floor(f));
}

[[noreturn]] void throw_infeasible(const StGraph& g, const LpOutcome& outcome) {
  std::ostringstream msg;
  msg << (g.orientation() == Orientation::Vertical ? "width" : "height")
      << " network is infeasible (phase-1 residual " << outcome.infeasibility << ")";
  throw InfeasibleError(g.orientation(), outcome.infeasibility, msg.str());
}

FlowAssignment assignment(const StGraph& g, std::vector<double> flow) {
  FlowAssignment fa{g, std::move(flow), {}, 0.0};
  for (RoomId room : g.rooms()) {
    double sum = 0.0;
    for (std::size_t i : g.in_edges(room)) sum += fa.flow[i];
    fa.room_dim[room] = sum;
  }
  for (std::size_t i : g.out_edges(g.source())) fa.objective += fa.flow[i];
  return fa;
}

bool all_finite(const DimensionMap& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return std::isfinite(kv.second); });
}

}  // namespace

FlowAssignment solve_flow(const StGraph& g, const DimensionMap& min_dim,
                          const std::map<RoomId, std::optional<double>>& max_dim, const DoorSpec& door,
                          const LpOptions& lp_options) {
  LinearProgram lp = assemble_flow_lp(g, min_dim, max_dim, door);
  const LpOutcome primary = solve_lp(lp, lp_options);
  if (primary.status == LpStatus::Infeasible) throw_infeasible(g, primary);
  if (primary.status != LpStatus::Optimal) {
    throw std::logic_error("flow LP reported " + to_string(primary.status));
  }

  // Second pass: hold the envelope at its optimum and pick the vertex with the
  // smallest weighted room dimensions.
  if (!std::isfinite(primary.objective_value)) return assignment(g, primary.x);
  LinearConstraint pin{lp.objective, Relation::Eq, primary.objective_value, "envelope"};
  std::vector<double> secondary(lp.num_vars, 0.0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const RoomId to = g.edges()[i].to;
    if (to.is_room()) secondary[i] = tie_break_weight(to);
  }
  lp.rows.push_back(std::move(pin));
  lp.objective = std::move(secondary);
  LpOutcome chosen = solve_lp(lp, lp_options);
  if (chosen.status != LpStatus::Optimal) chosen = primary;

  return assignment(g, chosen.x);
}

FlowAssignment solve_widths(const StGraph& vst, const ConstraintMap& constraints, const DoorSpec& door,
                            const DimensionMap& current_min_width, const LpOptions& lp_options) {
  std::map<RoomId, std::optional<double>> max_width;
  for (const auto& [room, c] : constraints) max_width[room] = c.max_width;
  return solve_flow(vst, current_min_width, max_width, door, lp_options);
}

DimensionMap min_heights(const DimensionMap& widths, const ConstraintMap& constraints) {
  DimensionMap out;
  for (const auto& [room, w] : widths) out[room] = w * constraints.at(room).ar_min;
  return out;
}

FlowAssignment solve_heights(const StGraph& hst, const DimensionMap& min_heights, const DoorSpec& door,
                             const std::map<RoomId, std::optional<double>>& max_heights,
                             const LpOptions& lp_options) {
  return solve_flow(hst, min_heights, max_heights, door, lp_options);
}

std::set<RoomId> ar_violations(const DimensionMap& widths, const DimensionMap& heights,
                               const ConstraintMap& constraints, double tol) {
  std::set<RoomId> out;
  for (const auto& [room, w] : widths) {
    const double ratio = heights.at(room) / w;
    const RoomConstraint& c = constraints.at(room);
    if (ratio < c.ar_min - tol) {
      throw std::logic_error("room " + to_string(room) + " has aspect ratio below ar_min");
    }
    if (ratio > c.ar_max + tol) out.insert(room);
  }
  return out;
}

DimensionMap update_min_widths(const DimensionMap& current_min, const DimensionMap& solved_heights,
                               const ConstraintMap& constraints, const std::set<RoomId>& violators) {
  DimensionMap out = current_min;
  for (RoomId room : violators) {
    const double wanted = solved_heights.at(room) / constraints.at(room).ar_max;
    out[room] = std::max(out.at(room), wanted);
  }
  return out;
}

DimensionResult dimension(const EncodedMatrix& em, const ConstraintMap& constraints, const DoorSpec& door,
                          const DimensionOptions& options) {
  for (RoomId room : em.rooms()) {
    auto it = constraints.find(room);
    if (it == constraints.end()) throw std::invalid_argument("no constraint for room " + to_string(room));
    const auto problems = check_constraint(it->second);
    if (!problems.empty()) {
      throw std::invalid_argument("room " + to_string(room) + ": " + problems.front());
    }
  }

  const auto started = std::chrono::steady_clock::now();
  const PaddedMatrix padded = pad_boundary(em);
  StGraph vst = build_vst(padded);
  StGraph hst = build_hst(padded);
  if (options.prune_sink_edges) {
    vst = prune_sink_edges(vst);
    hst = prune_sink_edges(hst);
  }

  std::map<RoomId, std::optional<double>> max_height;
  DimensionMap min_width;
  for (RoomId room : em.rooms()) {
    max_height[room] = constraints.at(room).max_height;
    min_width[room] = constraints.at(room).min_width;
  }

  DimensionResult result;
  // Widening can feed back on itself without bound; stop before overflow.
  auto diverged = [&result](int completed) {
    result.status = DimensionStatus::NonConvergent;
    result.trace.status = result.status;
    result.trace.message = "dimensions diverged after " + std::to_string(completed) + " iterations";
    return result;
  };
  for (int it = 1; it <= options.max_iterations; ++it) {
    if (options.time_budget && std::chrono::steady_clock::now() - started >= *options.time_budget) {
      result.status = DimensionStatus::NonConvergent;
      result.trace.message = "time budget exhausted after " + std::to_string(it - 1) + " iterations";
      result.trace.status = result.status;
      return result;
    }

    if (!all_finite(min_width)) return diverged(it - 1);

    IterationRecord rec;
    rec.index = it;
    rec.min_widths = min_width;
    try {
      FlowAssignment vnf = solve_widths(vst, constraints, door, min_width, options.lp);
      rec.widths = vnf.room_dim;
      rec.envelope_width = vnf.objective;
      rec.min_heights = min_heights(rec.widths, constraints);
      if (!all_finite(rec.min_heights)) return diverged(it - 1);
      FlowAssignment hnf = solve_heights(hst, rec.min_heights, door, max_height, options.lp);
      rec.heights = hnf.room_dim;
      rec.envelope_height = hnf.objective;
      rec.violators = ar_violations(rec.widths, rec.heights, constraints, options.tol);
      rec.updated_min_widths = update_min_widths(min_width, rec.heights, constraints, rec.violators);

      result.widths = rec.widths;
      result.heights = rec.heights;
      result.vnf = std::move(vnf);
      result.hnf = std::move(hnf);
    } catch (const InfeasibleError& e) {
      result.status = DimensionStatus::Infeasible;
      result.infeasible_network = e.network();
      result.failed_iteration = it;
      result.infeasibility = e.certificate();
      result.trace.status = result.status;
      result.trace.message = "iteration " + std::to_string(it) + ": " + e.what();
      return result;
    }

    const bool done = rec.violators.empty();
    min_width = rec.updated_min_widths;
    result.trace.iterations.push_back(std::move(rec));
    if (done) {
      result.status = DimensionStatus::Converged;
      result.trace.status = result.status;
      result.trace.message = "converged after " + std::to_string(it) + " iteration" + (it == 1 ? "" : "s");
      return result;
    }
  }

  result.status = DimensionStatus::NonConvergent;
  result.trace.status = result.status;
  result.trace.message = "aspect ratios still out of range after " + std::to_string(options.max_iterations) +
                         " iterations";
  return result;
}

}  // namespace rectfp
