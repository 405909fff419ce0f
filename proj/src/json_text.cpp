#include "cogkit/json_text.hpp"

#include <algorithm>

namespace cogkit {

namespace {

bool flat(const nlohmann::ordered_json& j) {
  if (j.is_structured()) return std::all_of(j.begin(), j.end(), [](const auto& x) { return x.is_primitive(); });
  return true;
}

void write(std::string& out, const nlohmann::ordered_json& j, int depth) {
  if (flat(j)) {
    if (!j.is_structured()) {
      out += j.dump();
      return;
    }
    const bool obj = j.is_object();
    out += obj ? "{" : "[";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      if (k) out += ", ";
      if (obj) out += nlohmann::ordered_json(it.key()).dump() + ": ";
      out += it->dump();
    }
    out += obj ? "}" : "]";
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad;
    if (obj) out += nlohmann::ordered_json(it.key()).dump() + ": ";
    write(out, *it, depth + 1);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(2 * depth, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j) {
  std::string out;
  write(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace cogkit
