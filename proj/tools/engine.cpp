// engine: command-line front end for the movable-objects engine.
//
//   engine run [--scene NAME]                      protocol on stdin/stdout
//   engine replay SCRIPT [--snapshot-out PATH]     fold a script, print the final layout
//   engine demo personal-data [--port 7341]        serve the demo to a client
//   engine dump-default NAME                       print a scene's default layout
//
// Exit codes: 0 success, 1 script parse error, 2 I/O error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "movable/persistence.hpp"
#include "movable/server.hpp"
#include "movable/session.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitIo = 2;

movable::DemoServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_replay(const std::string& scene_name, const std::string& script_path, const std::string& snapshot_out) {
  std::ifstream in(script_path, std::ios::binary);
  if (!in) {
    std::cerr << "engine: cannot read '" << script_path << "'\n";
    return kExitIo;
  }
  std::ostringstream text;
  text << in.rdbuf();

  movable::ReplayScript script;
  try {
    script = movable::parse_script(text.str());
  } catch (const movable::ScriptError& e) {
    std::cerr << script_path << ": " << e.what() << '\n';
    return kExitParse;
  }

  const auto result = movable::replay(movable::build_scene(scene_name), script);
  for (const auto& [line, reply] : result.errors) std::cerr << script_path << ":" << line << ": " << reply << '\n';

  if (snapshot_out.empty()) {
    std::cout << result.snapshot.text << '\n';
    return kExitOk;
  }
  std::ofstream out(snapshot_out, std::ios::binary | std::ios::trunc);
  if (!(out << result.snapshot.text << '\n')) {
    std::cerr << "engine: cannot write '" << snapshot_out << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_demo(const std::string& scene_name, int port, const std::string& transport) {
  movable::Engine engine(movable::build_scene(scene_name));
  movable::DemoServer server(engine, transport == "tcp" ? movable::DemoServer::Transport::tcp
                                                        : movable::DemoServer::Transport::http);
  int bound = 0;
  try {
    bound = server.bind(port);
  } catch (const movable::Error& e) {
    std::cerr << "engine: " << e.what() << '\n';
    return kExitIo;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "serving " << scene_name << " (" << transport << ") on 127.0.0.1:" << bound << '\n';
  server.serve();
  g_server = nullptr;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct-manipulation engine: movable, resizable objects with invisible covers"};
  app.require_subcommand(1);

  std::string scene_name = "personal-data";
  auto* run = app.add_subcommand("run", "Speak the line protocol on stdin/stdout");
  run->add_option("--scene", scene_name, "Scene to start from")->check(CLI::IsMember(movable::scene_names()));

  std::string script_path;
  std::string snapshot_out;
  auto* replay = app.add_subcommand("replay", "Replay a script from the default scene and print the final layout");
  replay->add_option("script", script_path, "Script file, one message per line")->required();
  replay->add_option("--snapshot-out", snapshot_out, "Write the final layout here instead of stdout");
  replay->add_option("--scene", scene_name, "Scene to start from")->check(CLI::IsMember(movable::scene_names()));

  int port = 7341;
  std::string transport = "http";
  auto* demo = app.add_subcommand("demo", "Serve a demo scene on a local socket");
  demo->add_option("scene", scene_name, "Demo scene")->required()->check(CLI::IsMember(movable::scene_names()));
  demo->add_option("--port", port, "Port on 127.0.0.1")->check(CLI::Range(0, 65535));
  demo->add_option("--transport", transport, "http (browser client) or tcp (raw lines)")
      ->check(CLI::IsMember({"http", "tcp"}));

  auto* dump = app.add_subcommand("dump-default", "Print a scene's default layout");
  dump->add_option("scene", scene_name, "Scene name")->required()->check(CLI::IsMember(movable::scene_names()));

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    movable::Engine engine(movable::build_scene(scene_name));
    movable::serve_stream(engine, std::cin, std::cout);
    return kExitOk;
  }
  if (*replay) return run_replay(scene_name, script_path, snapshot_out);
  if (*demo) return run_demo(scene_name, port, transport);
  if (*dump) {
    std::cout << movable::build_scene(scene_name).default_layout().text << '\n';
    return kExitOk;
  }
  return kExitOk;
}
