#include <doctest.h>

#include "gwcubic/errors.hpp"
#include "gwcubic/kontsevich.hpp"
#include "support/kontsevich_reference.hpp"

using namespace gwcubic;

TEST_CASE("base case and first values") {
    CHECK(kontsevich_number(1) == 1);
    CHECK(kontsevich_number(2) == 1);  // hand: 1*1*1*(1*C(2,1) - 1*C(2,2)) = 2 - 1
    CHECK(kontsevich_number(3) == 12);
    CHECK(kontsevich_number(4) == 620);
    CHECK(kontsevich_number(5) == 87304);
    CHECK_THROWS_AS(kontsevich_number(0), InvalidInput);
}

TEST_CASE("matches the independent reference recursion") {
    CHECK(gwcubic_test::reference_kontsevich(3) == 12);  // anchors the reference itself
    for (int d = 1; d <= 8; ++d) {
        CHECK(kontsevich_number(d) == gwcubic_test::reference_kontsevich(d));
    }
}
