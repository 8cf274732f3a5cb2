#pragma once

#include <cstdint>
#include <utility>

#include "hcaff/combinatorics.hpp"

namespace hcaff {

// c_i * c^eps = sign * c^{eps'} in the increasing-index monomial basis, c_i^2 = -1
inline std::pair<int, std::uint32_t> clifford_left(int i, std::uint32_t eps)
{
    std::uint32_t bit = 1u << (i - 1);
    int sign = (__builtin_popcount(eps & (bit - 1)) % 2) ? -1 : 1;
    if (eps & bit) return {-sign, eps & ~bit};
    return {sign, eps | bit};
}

// w c^eps w^{-1} = sign * c^{w(eps)}
inline std::pair<int, std::uint32_t> clifford_permute(const Permutation& w, std::uint32_t eps)
{
    int img[32];
    int m = 0;
    std::uint32_t out = 0;
    for (int k = 1; k <= w.size(); ++k) {
        if (eps >> (k - 1) & 1) {
            img[m++] = w(k);
            out |= 1u << (w(k) - 1);
        }
    }
    int inv = 0;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (img[a] > img[b]) ++inv;
    return {inv % 2 ? -1 : 1, out};
}

} // namespace hcaff
