#include "kwclass/config.hpp"

#include <algorithm>
#include <cstdlib>

namespace kwclass {

int max_n() {
  static const int value = [] {
    long v = kDefaultMaxN;
    if (const char* env = std::getenv("KWCLASS_MAX_N")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0') v = parsed;
    }
    return static_cast<int>(std::clamp<long>(v, 0, kAbsoluteMaxN));
  }();
  return value;
}

int max_n_graph() { return std::min(kDefaultMaxNGraph, max_n()); }

}  // namespace kwclass
