#include "htldp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace htldp {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HTLDP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace htldp
