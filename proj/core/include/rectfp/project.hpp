#pragma once

#include <string>

#include "rectfp/dimensioner.hpp"
#include "rectfp/encoded_matrix.hpp"

namespace rectfp {

struct SolveOptions {
  int max_iterations = 50;
  double tol = 1e-6;
  bool prune_sink_edges = false;

  bool operator==(const SolveOptions&) const = default;
};

/// An arrangement together with everything needed to dimension it.
struct Project {
  std::string name;
  std::string description;
  EncodedMatrix matrix;
  ConstraintMap constraints;
  DoorSpec door;
  SolveOptions options;

  bool operator==(const Project&) const = default;
};

}  // namespace rectfp
