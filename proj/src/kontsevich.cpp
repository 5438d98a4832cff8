#include "gwcubic/kontsevich.hpp"

#include <mutex>
#include <vector>

#include "gwcubic/errors.hpp"

namespace gwcubic {

Integer kontsevich_number(int d) {
    if (d < 1) throw InvalidInput("kontsevich_number requires d >= 1");
    static std::mutex mu;
    static std::vector<Integer> memo{Integer(1)};  // memo[i] = K_{i+1}
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) < d) {
        const long n = static_cast<long>(memo.size()) + 1;
        Integer k(0);
        for (long d1 = 1; d1 < n; ++d1) {
            const long d2 = n - d1;
            Integer term = memo[d1 - 1] * memo[d2 - 1] * (d1 * d1) * d2;
            term *= Integer(d2) * binomial(3 * n - 4, 3 * d1 - 2) -
                    Integer(d1) * binomial(3 * n - 4, 3 * d1 - 1);
            k += term;
        }
        memo.push_back(k);
    }
    return memo[static_cast<size_t>(d) - 1];
}

}  // namespace gwcubic
