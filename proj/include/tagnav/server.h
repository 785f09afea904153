#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include "tagnav/api.h"

namespace httplib {
class Server;
}

namespace tagnav {

struct Address {
  std::string host = "127.0.0.1";
  int port = 8080;
};

// "host:port"; throws Error(InvalidArgument).
Address parse_address(std::string_view text);

// HTTP front of a Service. Every response carries the state generation it was
// computed from in the X-Tagnav-Generation header.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds (port 0 picks a free port) and serves on a background thread.
  // Returns the bound port. Throws Error(AddressInUse).
  int start(const Address& address);
  // Binds and serves on the calling thread until stop().
  void run(const Address& address);
  void stop();

 private:
  Service& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace tagnav
