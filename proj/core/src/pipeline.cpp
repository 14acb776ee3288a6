#include "rectfp/pipeline.hpp"

#include <stdexcept>

namespace rectfp {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "solved";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::NonConvergent:
      return "non_convergent";
    case SolveStatus::VerificationFailed:
      return "verification_failed";
  }
  return "unknown";
}

SolveStatus solve_status_from_string(const std::string& s) {
  for (auto st : {SolveStatus::Solved, SolveStatus::Infeasible, SolveStatus::NonConvergent,
                  SolveStatus::VerificationFailed}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown solve status '" + s + "'");
}

SolveResult solve(const Project& project, const SolveSettings& settings) {
  const auto started = std::chrono::steady_clock::now();

  DimensionOptions options;
  options.max_iterations = project.options.max_iterations;
  options.tol = project.options.tol;
  options.prune_sink_edges = project.options.prune_sink_edges;
  options.time_budget = settings.time_budget;

  DimensionResult dims = dimension(project.matrix, project.constraints, project.door, options);

  SolveResult result(project.matrix);
  result.message = dims.trace.message;
  result.trace = dims.trace;
  result.vnf = dims.vnf;
  result.hnf = dims.hnf;

  switch (dims.status) {
    case DimensionStatus::Converged: {
      Floorplan fp = place_rooms(project.matrix, dims.widths, dims.heights);
      VerificationReport report = verify(fp, project.door, options.tol);
      result.status = report.ok() ? SolveStatus::Solved : SolveStatus::VerificationFailed;
      if (!report.ok()) result.message = "plan failed verification";
      result.floorplan = std::move(fp);
      result.verification = std::move(report);
      break;
    }
    case DimensionStatus::Infeasible:
      result.status = SolveStatus::Infeasible;
      result.infeasible = InfeasibleDetail{*dims.infeasible_network, dims.failed_iteration, dims.infeasibility};
      break;
    case DimensionStatus::NonConvergent:
      result.status = SolveStatus::NonConvergent;
      break;
  }

  result.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace rectfp
