#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rectfp/project.hpp"

namespace rectfp {

/// Bundled example projects. Constraint values are illustrative defaults.
const std::vector<Project>& fixture_catalog();

std::optional<Project> find_fixture(std::string_view name);

}  // namespace rectfp
