#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace arc {

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// number of ways to dissect a convex n-gon by exactly k pairwise
// non-crossing chords
inline Int dissection_count(long long n, long long k) {
    if (n < 3 || k < 0) throw std::invalid_argument("dissection_count needs n >= 3, k >= 0");
    if (k == 0) return 1;
    return binomial(n - 3, k) * binomial(n + k - 1, k) / (k + 1);
}

// Catalan numbers by the convolution recurrence, independent of any closed
// form
inline Int catalan(long long n) {
    if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
    std::vector<Int> c(static_cast<std::size_t>(n + 1));
    c[0] = 1;
    for (long long m = 1; m <= n; ++m) {
        Int sum = 0;
        for (long long i = 0; i < m; ++i)
            sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
        c[static_cast<std::size_t>(m)] = sum;
    }
    return c[static_cast<std::size_t>(n)];
}

}  // namespace arc
