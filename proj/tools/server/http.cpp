#include "api.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <stdexcept>

namespace galois::server {

struct HttpFrontend::Impl {
  httplib::Server http;
};

HttpFrontend::HttpFrontend(const ApiService& api) : impl_(std::make_unique<Impl>()) {
  auto dispatch = [&api](const httplib::Request& req, httplib::Response& res) {
    const auto out = api.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
    for (const auto& [name, value] : cors_headers) res.set_header(name, value);
    spdlog::debug("{} {} -> {}", req.method, req.path, out.status);
  };
  // SO_REUSEADDR only: SO_REUSEPORT would let a second server share a busy port.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  impl_->http.Get(".*", dispatch);
  impl_->http.Post(".*", dispatch);
  impl_->http.Options(".*", dispatch);
}

HttpFrontend::~HttpFrontend() = default;

int HttpFrontend::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpFrontend::run() {
  if (!impl_->http.listen_after_bind()) throw std::runtime_error("server stopped unexpectedly");
}

void HttpFrontend::stop() { impl_->http.stop(); }

} // namespace galois::server
