#pragma once

#include "gwcubic/rational.hpp"

namespace gwcubic {

// K_d: rational degree-d plane curves through 3d-1 general points.
// K_1 = 1 and
//   K_d = sum over d1+d2=d, d1,d2>=1 of
//         K_{d1} K_{d2} d1^2 d2 (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1)).
// Memoized; throws InvalidInput for d < 1. Safe to call concurrently.
Integer kontsevich_number(int d);

}  // namespace gwcubic
