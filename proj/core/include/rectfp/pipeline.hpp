#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "rectfp/dimensioner.hpp"
#include "rectfp/project.hpp"
#include "rectfp/rfp_builder.hpp"

namespace rectfp {

enum class SolveStatus { Solved, Infeasible, NonConvergent, VerificationFailed };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

struct InfeasibleDetail {
  Orientation network = Orientation::Vertical;
  int iteration = 0;
  double certificate = 0.0;

  bool operator==(const InfeasibleDetail&) const = default;
};

struct SolveResult {
  explicit SolveResult(EncodedMatrix m) : matrix(std::move(m)) {}

  SolveStatus status = SolveStatus::NonConvergent;
  std::string message;
  EncodedMatrix matrix;
  std::optional<Floorplan> floorplan;
  IterationTrace trace;
  std::optional<VerificationReport> verification;
  std::optional<FlowAssignment> vnf;
  std::optional<FlowAssignment> hnf;
  std::optional<InfeasibleDetail> infeasible;
  double timing_ms = 0.0;
};

struct SolveSettings {
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Dimensions, places and verifies a project. A converged solve whose plan
/// fails verification is reported as VerificationFailed.
SolveResult solve(const Project& project, const SolveSettings& settings = {});

}  // namespace rectfp
