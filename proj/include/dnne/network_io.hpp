#pragma once

#include "dnne/ann.hpp"

#include <string>

namespace dnne::io {

/// Versioned line-based text format for networks. Reals are written with
/// shortest round-trip formatting, so save -> load is bit-exact.
std::string network_to_text(const ann::NetworkSpec& net);
ann::NetworkSpec network_from_text(const std::string& text);

void save_network(const ann::NetworkSpec& net, const std::string& path);
ann::NetworkSpec load_network(const std::string& path);

} // namespace dnne::io
