#include "movable/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

#include <httplib.h>

namespace movable {

void serve_stream(Engine& engine, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (is_ignorable_line(line)) continue;
    out << engine.handle_line(line).text << '\n';
    out.flush();
  }
}

struct DemoServer::Http {
  httplib::Server server;
};

DemoServer::DemoServer(Engine& engine, Transport transport) : engine_(engine), transport_(transport) {}

DemoServer::~DemoServer() {
  stop();
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

std::string DemoServer::handle_batch(const std::string& body) {
  std::istringstream in(body);
  std::ostringstream out;
  const std::lock_guard lock(engine_mutex_);
  serve_stream(engine_, in, out);
  return out.str();
}

int DemoServer::bind(int port) {
  if (transport_ == Transport::http) {
    http_ = std::make_unique<Http>();
    auto& server = http_->server;
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options("/session", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "POST");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Post("/session", [this](const httplib::Request& req, httplib::Response& res) {
      res.set_content(handle_batch(req.body), "text/plain");
    });
    const int bound = port == 0 ? server.bind_to_any_port("127.0.0.1") : (server.bind_to_port("127.0.0.1", port) ? port : -1);
    if (bound < 0) throw Error(ErrorCode::io, "cannot bind 127.0.0.1:" + std::to_string(port));
    return bound;
  }

  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw Error(ErrorCode::io, std::string("socket: ") + std::strerror(errno));
  const int yes = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 4) != 0) {
    throw Error(ErrorCode::io, "cannot bind 127.0.0.1:" + std::to_string(port) + ": " + std::strerror(errno));
  }
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  return ntohs(addr.sin_port);
}

void DemoServer::serve() {
  if (transport_ == Transport::http) {
    if (!http_) throw Error(ErrorCode::io, "server is not bound");
    http_->server.listen_after_bind();
    return;
  }
  serve_tcp();
}

void DemoServer::stop() {
  stopping_ = true;
  if (http_) http_->server.stop();
}

namespace {

bool wait_readable(int fd, const std::atomic<bool>& stopping) {
  pollfd p{fd, POLLIN, 0};
  while (!stopping) {
    const int r = ::poll(&p, 1, 100);
    if (r > 0) return true;
    if (r < 0 && errno != EINTR) return false;
  }
  return false;
}

bool write_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n <= 0) return false;
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

}  // namespace

void DemoServer::serve_tcp() {
  if (listen_fd_ < 0) throw Error(ErrorCode::io, "server is not bound");
  while (wait_readable(listen_fd_, stopping_)) {
    const int client = ::accept(listen_fd_, nullptr, nullptr);
    if (client < 0) continue;
    std::string pending;
    char buf[4096];
    bool open = true;
    while (open && wait_readable(client, stopping_)) {
      const ssize_t n = ::recv(client, buf, sizeof buf, 0);
      if (n <= 0) break;
      pending.append(buf, static_cast<std::size_t>(n));
      std::size_t nl;
      while (open && (nl = pending.find('\n')) != std::string::npos) {
        const std::string line = pending.substr(0, nl);
        pending.erase(0, nl + 1);
        if (is_ignorable_line(line)) continue;
        std::string reply;
        {
          const std::lock_guard lock(engine_mutex_);
          reply = engine_.handle_line(line).text;
        }
        open = write_all(client, reply + '\n');
      }
    }
    ::close(client);
  }
}

}  // namespace movable
