#include "arfc/parallel.hpp"

namespace arfc {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace arfc
