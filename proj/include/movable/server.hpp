#pragma once

// Transports for the line protocol. Each reply is written before the next
// line is read, so replies never interleave and order is preserved.

#include <atomic>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>

#include "movable/session.hpp"

namespace movable {

// Reads messages from `in` until EOF, writing one reply line per message.
// Blank and '#' lines are skipped without a reply.
void serve_stream(Engine& engine, std::istream& in, std::ostream& out);

// Localhost server for the demo client. Engine state outlives connections,
// so a reconnecting client sees the same scene.
class DemoServer {
 public:
  enum class Transport {
    http,  // POST /session: body holds protocol lines, response the reply lines
    tcp,   // raw newline-delimited protocol, one client at a time
  };

  DemoServer(Engine& engine, Transport transport);
  ~DemoServer();

  DemoServer(const DemoServer&) = delete;
  DemoServer& operator=(const DemoServer&) = delete;

  // Binds 127.0.0.1:port (0 picks a free port) and returns the bound port.
  // Throws Error(io) on failure.
  int bind(int port);

  // Blocks until stop() is called from another thread.
  void serve();
  void stop();

 private:
  std::string handle_batch(const std::string& body);
  void serve_tcp();

  Engine& engine_;
  Transport transport_;
  std::mutex engine_mutex_;
  std::atomic<bool> stopping_{false};
  int listen_fd_ = -1;
  struct Http;
  std::unique_ptr<Http> http_;
};

}  // namespace movable
