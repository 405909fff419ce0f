#pragma once

#include <string>

#include "json.hpp"

namespace cogkit {

/// Two-space indented JSON with arrays of scalars kept on one line, ending in
/// a newline. Key order is preserved, so equal inputs give equal bytes.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace cogkit
