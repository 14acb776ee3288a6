#pragma once

#include <optional>
#include <string>

#include "rectfp/service_api.hpp"

namespace httplib {
class Server;
}

namespace rectfp::service {

struct ServerOptions {
  Config config;
  /// Value of Access-Control-Allow-Origin.
  std::string allow_origin = "*";
  /// Static files served at "/" when set.
  std::optional<std::string> web_root;
};

/// Registers the /api routes, CORS handling and the body size cap.
void install_routes(httplib::Server& server, const ServerOptions& options);

struct Endpoint {
  std::string host;
  int port = 0;
};

/// Parses "host:port" or ":port"; an empty host means 127.0.0.1.
std::optional<Endpoint> parse_endpoint(const std::string& text);

}  // namespace rectfp::service
