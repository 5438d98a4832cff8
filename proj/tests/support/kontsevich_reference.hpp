#pragma once

// Independent evaluation of the classical recursion for the count of rational
// degree-d plane curves through 3d-1 general points. Deliberately shares no
// code with the library: binomials come from a Pascal triangle built here,
// and the recursion is evaluated top-down. Keep this file self-contained so
// it stays an oracle.

#include <gmpxx.h>

#include <vector>

namespace gwcubic_test {

inline mpz_class reference_pascal(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        rows[static_cast<size_t>(r)].assign(static_cast<size_t>(r) + 1, 1);
        for (int c = 1; c < r; ++c) {
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] +
                rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
        }
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

inline mpz_class reference_kontsevich(int d) {
    if (d == 1) return 1;
    mpz_class total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        mpz_class left = reference_kontsevich(d1);
        mpz_class right = reference_kontsevich(d2);
        mpz_class bracket = mpz_class(d2) * reference_pascal(3 * d - 4, 3 * d1 - 2) -
                            mpz_class(d1) * reference_pascal(3 * d - 4, 3 * d1 - 1);
        total += left * right * d1 * d1 * d2 * bracket;
    }
    return total;
}

}  // namespace gwcubic_test
