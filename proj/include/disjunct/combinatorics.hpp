#pragma once

#include <cstdint>

#include "disjunct/errors.hpp"

namespace disjunct {

/// Binomial coefficient C(n, k); 0 when k > n. Throws on uint64 overflow.
inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~std::uint64_t{0}) throw ParameterError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

}  // namespace disjunct
