#include <httplib.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <csignal>
#include <cstdlib>

#include "http_server.hpp"

namespace {
httplib::Server* g_server = nullptr;
}

int main(int argc, char** argv) {
  CLI::App app{"HTTP JSON API for the floorplan solver.", "rectfp_serve"};
  std::string addr = "127.0.0.1:8080";
  if (const char* env = std::getenv("RECTFP_ADDR")) addr = env;
  rectfp::service::ServerOptions options;
  std::string web_root;
  long timeout_ms = options.config.solve_timeout.count();

  app.add_option("--addr", addr, "host:port to bind (env RECTFP_ADDR)");
  app.add_option("--web-root", web_root, "Directory served at /");
  app.add_option("--allow-origin", options.allow_origin, "CORS allowed origin");
  app.add_option("--solve-timeout-ms", timeout_ms, "Per-request solve budget")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  if (const char* level = std::getenv("RECTFP_LOG")) spdlog::set_level(spdlog::level::from_str(level));
  options.config.solve_timeout = std::chrono::milliseconds(timeout_ms);
  if (!web_root.empty()) options.web_root = web_root;

  const auto endpoint = rectfp::service::parse_endpoint(addr);
  if (!endpoint) {
    spdlog::error("bad address '{}', expected host:port", addr);
    return 1;
  }

  httplib::Server server;
  rectfp::service::install_routes(server, options);
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::info("{} {} -> {}", req.method, req.path, res.status);
  });

  g_server = &server;
  std::signal(SIGINT, [](int) { g_server->stop(); });
  std::signal(SIGTERM, [](int) { g_server->stop(); });

  if (!server.bind_to_port(endpoint->host, endpoint->port)) {
    spdlog::error("cannot bind {}", addr);
    return 1;
  }
  spdlog::info("listening on {}", addr);
  server.listen_after_bind();
  return 0;
}
