#pragma once

#include <functional>
#include <string>

#include "pst/api.hpp"

namespace pst {

inline constexpr int kDefaultPort = 7341;

// Serves `api` over HTTP until interrupted (SIGINT/SIGTERM). `on_ready` is
// called with the bound port once listening. Returns false if binding fails.
bool serve(const Api& api, const std::string& host, int port, const std::function<void(int)>& on_ready = {});

}  // namespace pst
