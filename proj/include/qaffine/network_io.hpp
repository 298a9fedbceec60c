#pragma once

#include <stdexcept>
#include <string>

#include "qaffine/network.hpp"

namespace qaffine {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse the JSON network format; throws ParseError or NetworkError.
Network parse_network(const std::string& text);
Network load_network(const std::string& path);
std::string network_to_json(const Network& net);
void save_network(const Network& net, const std::string& path);

}  // namespace qaffine
