#include "rectfp/service_api.hpp"

#include "rectfp/fixtures.hpp"

namespace rectfp::service {

std::string to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation:
      return "VALIDATION";
    case ErrorCode::Infeasible:
      return "INFEASIBLE";
    case ErrorCode::NonConvergent:
      return "NON_CONVERGENT";
    case ErrorCode::Internal:
      return "INTERNAL";
  }
  return "INTERNAL";
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation:
      return 422;
    case ErrorCode::Infeasible:
    case ErrorCode::NonConvergent:
      return 409;
    case ErrorCode::Internal:
      return 500;
  }
  return 500;
}

Response error_response(ErrorCode code, const std::string& message, const json& details) {
  json body{{"error", {{"code", to_string(code)}, {"message", message}, {"details", details}}}};
  return {http_status(code), body.dump(2) + "\n"};
}

namespace {

Response bad_request(const std::string& message) {
  json body{{"error", {{"code", "BAD_REQUEST"}, {"message", message}, {"details", nullptr}}}};
  return {400, body.dump(2) + "\n"};
}

Response too_large(const Config& config) {
  json body{{"error",
             {{"code", "PAYLOAD_TOO_LARGE"},
              {"message", "request body exceeds " + std::to_string(config.max_body_bytes) + " bytes"},
              {"details", nullptr}}}};
  return {413, body.dump(2) + "\n"};
}

}  // namespace

Response handle_validate(std::string_view body, const Config& config) {
  if (body.size() > config.max_body_bytes) return too_large(config);
  json doc = json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded()) return bad_request("malformed JSON");
  return {200, write_violations(validate_project(doc)).dump(2) + "\n"};
}

Response handle_solve(std::string_view body, const Config& config, bool include_timing) {
  if (body.size() > config.max_body_bytes) return too_large(config);
  json doc = json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded()) return bad_request("malformed JSON");

  std::optional<Project> project;
  try {
    project = read_project(doc);
  } catch (const MatrixError& e) {
    return error_response(ErrorCode::Validation, e.what(), write_violations(e.violations()));
  } catch (const SchemaError& e) {
    return error_response(ErrorCode::Validation, e.what(), json{{"path", e.path()}});
  }

  try {
    const SolveResult result = solve(*project, SolveSettings{config.solve_timeout});
    switch (result.status) {
      case SolveStatus::Solved:
        return {200, result_text(result, include_timing)};
      case SolveStatus::Infeasible:
        return error_response(ErrorCode::Infeasible, result.message, write_result(result, include_timing));
      case SolveStatus::NonConvergent:
        return error_response(ErrorCode::NonConvergent, result.message, write_result(result, include_timing));
      case SolveStatus::VerificationFailed:
        return error_response(ErrorCode::Internal, result.message, write_result(result, include_timing));
    }
  } catch (const std::exception& e) {
    return error_response(ErrorCode::Internal, e.what());
  }
  return error_response(ErrorCode::Internal, "unreachable");
}

Response handle_examples() {
  json list = json::array();
  for (const Project& p : fixture_catalog()) list.push_back(write_project(p));
  return {200, list.dump(2) + "\n"};
}

Response handle_health() { return {200, "ok", "text/plain"}; }

}  // namespace rectfp::service
