#pragma once

#include <string>

#include "rectfp/rfp_builder.hpp"

namespace rectfp {

struct SvgOptions {
  bool labels = true;
  /// Pixels per length unit. Every coordinate in the output is the floorplan
  /// coordinate times this factor.
  double scale = 20.0;
  double margin = 10.0;
};

/// One <rect> for the envelope and one per room; with labels, a centered
/// "i (w×h)" caption per room. Output is a pure function of the input.
std::string emit_svg(const Floorplan& fp, const SvgOptions& options = {});

/// Compact decimal rendering: at most `decimals` places, trailing zeros cut.
std::string format_number(double v, int decimals = 4);

}  // namespace rectfp
