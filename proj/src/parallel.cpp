#include "tukey/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tukey {

int thread_count() {
  if (const char* env = std::getenv("TUKEY_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace tukey
