#include "interlace/parallel.hpp"

#include <cstdlib>
#include <string>

namespace interlace {

int default_workers() {
  if (const char* env = std::getenv("INTERLACE_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace interlace
