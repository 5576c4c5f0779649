#include "fewinv/bigint.hpp"

#include <stdexcept>

namespace fewinv {

Int binomial(long long n, long long k) {
    if (k < 0)
        return 0;
    if (k == 0)
        return 1; // empty product, also for negative n
    if (n < 0)
        throw std::invalid_argument("binomial: negative upper index with positive lower index");
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is binom(n-k+i, i) at this point
    }
    return result;
}

Int factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

} // namespace fewinv
