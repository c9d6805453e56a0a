#pragma once

#include <cstdint>
#include <vector>

// Test-only oracles, kept independent of the library's implementation paths.

namespace sslab_test {

// O(n^2) pair scan.
inline uint64_t pair_scan_inversions(const std::vector<int32_t>& v) {
    uint64_t inv = 0;
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b)
            if (v[a] > v[b]) ++inv;
    return inv;
}

}  // namespace sslab_test
