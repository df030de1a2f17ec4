#include "bshell/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bshell {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BSHELL_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
#ifdef _OPENMP
  int v = omp_get_max_threads();
  return v > 0 ? v : 1;
#else
  return 1;
#endif
}

}  // namespace bshell
