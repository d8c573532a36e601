#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace nesto {

// Subsets of [n] as bitmasks: element i (1-based) <-> bit i-1.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit_of(int element) { return Mask(1) << (element - 1); }
inline bool contains(Mask m, int element) { return (m >> (element - 1)) & 1; }
inline int lowest_element(Mask m) { return std::countr_zero(m) + 1; }
inline int highest_element(Mask m) { return 64 - std::countl_zero(m); }
inline Mask full_mask(int n) { return n == 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> v;
    while (m) {
        v.push_back(lowest_element(m));
        m &= m - 1;
    }
    return v;
}

// canonical member order used everywhere: popcount, then numeric mask value
inline bool canonical_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

inline std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

}  // namespace nesto
