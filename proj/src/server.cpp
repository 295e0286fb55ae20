#include "pst/server.hpp"

#include <csignal>

#include <httplib.h>

namespace pst {

namespace {

httplib::Server* active = nullptr;

void on_signal(int) {
  if (active) active->stop();
}

}  // namespace

bool serve(const Api& api, const std::string& host, int port, const std::function<void(int)>& on_ready) {
  httplib::Server server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get(".*", [&api](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const auto out = api.get(req.path, query);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json; charset=utf-8");
  });

  const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return false;
  active = &server;
  auto previous_int = std::signal(SIGINT, on_signal);
  auto previous_term = std::signal(SIGTERM, on_signal);
  if (on_ready) on_ready(bound);
  server.listen_after_bind();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  active = nullptr;
  return true;
}

}  // namespace pst
