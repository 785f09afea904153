#include "tagnav/server.h"

#include <charconv>

#include <httplib.h>

#include "tagnav/error.h"

namespace tagnav {

Address parse_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorCode::InvalidArgument, "address must be host:port, got " + std::string(text));
  }
  Address addr;
  addr.host = std::string(text.substr(0, colon));
  const auto port = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), addr.port);
  if (ec != std::errc() || ptr != port.data() + port.size() || addr.port < 0 ||
      addr.port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "invalid port in " + std::string(text));
  }
  return addr;
}

HttpServer::HttpServer(Service& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.params.emplace(k, v);
    request.body = req.body;
    const ApiResponse response = service_.handle(request);
    res.status = response.status;
    res.set_header("X-Tagnav-Generation", std::to_string(response.generation));
    res.set_content(response.body, "application/json");
  };
  // httplib's defaults include SO_REUSEPORT, which would let a second server
  // share a port that is already taken
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  server_->Get("/api/.*", dispatch);
  server_->Post("/api/.*", dispatch);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const Address& address) {
  int port = address.port;
  if (port == 0) {
    port = server_->bind_to_any_port(address.host);
  } else if (!server_->bind_to_port(address.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::AddressInUse,
                "cannot bind " + address.host + ":" + std::to_string(address.port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port;
}

void HttpServer::run(const Address& address) {
  if (!server_->bind_to_port(address.host, address.port)) {
    throw Error(ErrorCode::AddressInUse,
                "cannot bind " + address.host + ":" + std::to_string(address.port));
  }
  server_->listen_after_bind();
}

void HttpServer::stop() {
  if (server_->is_running()) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace tagnav
