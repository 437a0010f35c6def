#include "qsymcat/rational.hpp"

#include <mutex>
#include <vector>

namespace qsymcat {

Int factorial(int k) {
    if (k < 0) throw precondition_error("factorial of negative argument");
    static std::vector<Int> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[static_cast<size_t>(k)];
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace qsymcat
