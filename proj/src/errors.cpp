#include "gwcubic/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace gwcubic {

void internal_failure(const char* what) {
    std::fprintf(stderr, "gwcubic internal invariant violated: %s\n", what);
    std::abort();
}

}  // namespace gwcubic
