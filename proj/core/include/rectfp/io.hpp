#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectfp/pipeline.hpp"
#include "rectfp/project.hpp"

namespace rectfp {

using json = nlohmann::json;

/// A document that does not match the expected schema. `path` is a JSON
/// pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Strict: unknown keys, wrong types and constraint/matrix id mismatches throw
/// SchemaError; an invalid matrix throws MatrixError.
Project read_project(const json& doc);
json write_project(const Project& project);

/// Reads a matrix value (array of integer rows) as an unvalidated grid.
Grid read_grid(const json& doc, const std::string& path = "/matrix");
json write_matrix(const EncodedMatrix& em);

/// Every problem with a project document that is not a JSON syntax error:
/// matrix rule violations plus schema and constraint coverage problems.
std::vector<Violation> validate_project(const json& doc);
json write_violations(const std::vector<Violation>& violations);

json write_floorplan(const Floorplan& fp);
Floorplan read_floorplan(const json& doc, const EncodedMatrix& em);

json write_trace(const IterationTrace& trace);
IterationTrace read_trace(const json& doc);

json write_verification(const VerificationReport& report);

json write_flow(const FlowAssignment& flow);
FlowAssignment read_flow(const json& doc, const EncodedMatrix& em);

json write_result(const SolveResult& result, bool include_timing = true);
SolveResult read_result(const json& doc);

/// write_result(...).dump(2) plus a trailing newline; the one serialization
/// used by every front end.
std::string result_text(const SolveResult& result, bool include_timing = true);

}  // namespace rectfp
