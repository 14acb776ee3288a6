#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rectfp/encoded_matrix.hpp"
#include "rectfp/lp_solver.hpp"
#include "rectfp/stgraph.hpp"

namespace rectfp {

/// Per-room input. Aspect ratio is height / width.
struct RoomConstraint {
  double min_width = 1.0;
  double ar_min = 1.0;
  double ar_max = 1.0;
  std::optional<double> max_width;
  std::optional<double> max_height;

  bool operator==(const RoomConstraint&) const = default;
};

using ConstraintMap = std::map<RoomId, RoomConstraint>;
using DimensionMap = std::map<RoomId, double>;

/// Empty when the constraint is usable; otherwise one message per broken rule.
std::vector<std::string> check_constraint(const RoomConstraint& c);

/// Minimum wall-section length on every edge, with per-pair overrides.
struct DoorSpec {
  double default_min = 1.0;
  /// Keyed by (smaller id, larger id).
  std::map<std::pair<RoomId, RoomId>, double> overrides;

  /// Lower bound for the wall between `a` and `b`. Boundary walls always use
  /// the default.
  double width_for(RoomId a, RoomId b) const;
  void set_override(RoomId a, RoomId b, double width);

  bool operator==(const DoorSpec&) const = default;
};

/// Solved flow on one network.
struct FlowAssignment {
  StGraph graph;
  std::vector<double> flow;  // parallel to graph.edges()
  DimensionMap room_dim;     // inflow sum per room
  double objective = 0.0;    // sum of source-edge flows
};

/// An LP in the iteration came back infeasible.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(Orientation network, double certificate, std::string what)
      : std::runtime_error(std::move(what)), network_(network), certificate_(certificate) {}
  Orientation network() const { return network_; }
  double certificate() const { return certificate_; }

 private:
  Orientation network_;
  double certificate_;
};

/// Builds the flow LP for one network: one variable per edge bounded below by
/// its door width, the sum of source-edge flows as objective, conservation at
/// every room that conserves, and min_dim <= inflow (<= max_dim) per room.
LinearProgram assemble_flow_lp(const StGraph& g, const DimensionMap& min_dim,
                               const std::map<RoomId, std::optional<double>>& max_dim, const DoorSpec& door);

/// Solves assemble_flow_lp's program. Among the programs' optimal vertices the
/// one minimizing a fixed weighted sum of room dimensions is returned, so
/// equivalent networks (pruned or not) land on the same room dimensions.
/// Throws InfeasibleError.
FlowAssignment solve_flow(const StGraph& g, const DimensionMap& min_dim,
                          const std::map<RoomId, std::optional<double>>& max_dim, const DoorSpec& door,
                          const LpOptions& lp_options = {});

FlowAssignment solve_widths(const StGraph& vst, const ConstraintMap& constraints, const DoorSpec& door,
                            const DimensionMap& current_min_width, const LpOptions& lp_options = {});

/// h_min = w * ar_min for every room.
DimensionMap min_heights(const DimensionMap& widths, const ConstraintMap& constraints);

FlowAssignment solve_heights(const StGraph& hst, const DimensionMap& min_heights, const DoorSpec& door,
                             const std::map<RoomId, std::optional<double>>& max_heights,
                             const LpOptions& lp_options = {});

/// Rooms whose height / width exceeds ar_max + tol. Throws std::logic_error if
/// a room falls below ar_min - tol, which the height LP rules out.
std::set<RoomId> ar_violations(const DimensionMap& widths, const DimensionMap& heights,
                               const ConstraintMap& constraints, double tol);

/// Raises each violator's minimum width to h / ar_max, never lowering it.
DimensionMap update_min_widths(const DimensionMap& current_min, const DimensionMap& solved_heights,
                               const ConstraintMap& constraints, const std::set<RoomId>& violators);

enum class DimensionStatus { Converged, Infeasible, NonConvergent };

std::string to_string(DimensionStatus s);

struct IterationRecord {
  int index = 0;  // 1-based
  DimensionMap min_widths;
  DimensionMap widths;
  DimensionMap min_heights;
  DimensionMap heights;
  std::set<RoomId> violators;
  DimensionMap updated_min_widths;
  double envelope_width = 0.0;
  double envelope_height = 0.0;
};

struct IterationTrace {
  std::vector<IterationRecord> iterations;
  DimensionStatus status = DimensionStatus::NonConvergent;
  std::string message;

  std::size_t iteration_count() const { return iterations.size(); }
};

struct DimensionOptions {
  int max_iterations = 50;
  double tol = 1e-6;
  bool prune_sink_edges = false;
  /// Wall-clock budget; exceeding it ends the loop as NonConvergent.
  std::optional<std::chrono::milliseconds> time_budget;
  LpOptions lp;
};

struct DimensionResult {
  DimensionStatus status = DimensionStatus::NonConvergent;
  DimensionMap widths;
  DimensionMap heights;
  std::optional<FlowAssignment> vnf;
  std::optional<FlowAssignment> hnf;
  IterationTrace trace;
  /// Set when status is Infeasible.
  std::optional<Orientation> infeasible_network;
  int failed_iteration = 0;
  double infeasibility = 0.0;
};

/// Alternates width and height solves, raising minimum widths of rooms whose
/// aspect ratio overshoots, until every room is within its range.
DimensionResult dimension(const EncodedMatrix& em, const ConstraintMap& constraints, const DoorSpec& door,
                          const DimensionOptions& options = {});

}  // namespace rectfp
