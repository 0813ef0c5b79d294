#include "gsv/scan.hpp"

#include <cstdlib>
#include <cstring>

namespace gsv::scan {

static Mode initial_mode() {
#ifdef _OPENMP
  const char* env = std::getenv("GSV_PARALLEL");
  if (env != nullptr && std::strcmp(env, "0") == 0) return Mode::serial;
  return Mode::parallel;
#else
  return Mode::serial;
#endif
}

Mode& mode() {
  static Mode m = initial_mode();
  return m;
}

bool parallel_enabled() { return mode() == Mode::parallel; }

}  // namespace gsv::scan
