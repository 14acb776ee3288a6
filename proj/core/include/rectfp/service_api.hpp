#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>

#include "rectfp/io.hpp"

namespace rectfp::service {

/// Error categories of the JSON API and their HTTP statuses:
/// VALIDATION 422, INFEASIBLE 409, NON_CONVERGENT 409, INTERNAL 500.
enum class ErrorCode { Validation, Infeasible, NonConvergent, Internal };

std::string to_string(ErrorCode code);
int http_status(ErrorCode code);

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct Config {
  std::chrono::milliseconds solve_timeout{10000};
  std::size_t max_body_bytes = 1 << 20;
};

/// {"error": {"code", "message", "details"}} with the code's HTTP status.
Response error_response(ErrorCode code, const std::string& message, const json& details = nullptr);

/// POST /api/validate. 200 with a (possibly empty) violation array, 400 when
/// the body is not JSON.
Response handle_validate(std::string_view body, const Config& config = {});

/// POST /api/solve. 200 with the SolveResult document on success.
Response handle_solve(std::string_view body, const Config& config = {}, bool include_timing = true);

/// GET /api/examples. Array of fixture project documents.
Response handle_examples();

/// GET /api/health.
Response handle_health();

}  // namespace rectfp::service
