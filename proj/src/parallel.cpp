#include "apexion/parallel.hpp"

#include <string>

namespace apexion {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("APEXION_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace apexion
