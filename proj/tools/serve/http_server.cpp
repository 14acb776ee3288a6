#include "http_server.hpp"

#include <httplib.h>

#include <charconv>

namespace rectfp::service {

namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

void install_routes(httplib::Server& server, const ServerOptions& options) {
  const Config config = options.config;
  const std::string origin = options.allow_origin;

  server.set_payload_max_length(config.max_body_bytes);
  server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Vary", "Origin");
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Max-Age", "600");
  });

  server.Post("/api/validate", [config](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_validate(req.body, config));
  });
  server.Post("/api/solve", [config](const httplib::Request& req, httplib::Response& res) {
    const bool timing = req.get_param_value("timing") != "false";
    reply(res, handle_solve(req.body, config, timing));
  });
  server.Get("/api/examples", [](const httplib::Request&, httplib::Response& res) { reply(res, handle_examples()); });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });

  if (options.web_root) server.set_mount_point("/", *options.web_root);
}

std::optional<Endpoint> parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) return std::nullopt;
  Endpoint ep{text.substr(0, colon), 0};
  if (ep.host.empty()) ep.host = "127.0.0.1";
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, ep.port);
  if (ec != std::errc{} || ptr != last || first == last || ep.port < 0 || ep.port > 65535) return std::nullopt;
  return ep;
}

}  // namespace rectfp::service
