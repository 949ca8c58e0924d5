#pragma once

#include "galois/exportio.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace galois::server {

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Transport-independent route table over one immutable workspace.
/// Safe to call handle() from several threads at once.
class ApiService {
public:
  explicit ApiService(Workspace ws);

  Response handle(std::string_view method, std::string_view path, std::string_view body) const;

  const Workspace& workspace() const noexcept { return ws_; }

private:
  Response summary() const;
  Response mhier_roots() const;
  Response mhier_node(std::string_view id) const;
  Response rule(std::string_view id) const;
  Response hgen(std::string_view body) const;
  Response lattice_dot() const;

  Workspace ws_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const std::string>> hgen_cache_;
};

/// Headers added to every HTTP response.
inline constexpr std::pair<const char*, const char*> cors_headers[] = {
    {"Access-Control-Allow-Origin", "*"},
    {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
    {"Access-Control-Allow-Headers", "Content-Type"},
};

/// HTTP/1.1 front end for an ApiService.
class HttpFrontend {
public:
  explicit HttpFrontend(const ApiService& api);
  ~HttpFrontend();
  HttpFrontend(const HttpFrontend&) = delete;
  HttpFrontend& operator=(const HttpFrontend&) = delete;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound port.
  /// Throws std::runtime_error if the address is unavailable.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called.
  void run();
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace galois::server
