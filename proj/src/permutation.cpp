#include "sslab/permutation.hpp"

#include <string>

#include "sslab/rng.hpp"

namespace sslab {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
    std::vector<int32_t> keys(static_cast<size_t>(n));
    std::iota(keys.begin(), keys.end(), 1);
    return Permutation(std::move(keys));
}

Permutation Permutation::from_keys(std::vector<int32_t> keys) {
    const size_t n = keys.size();
    if (n == 0) throw std::invalid_argument("Permutation: empty key list");
    std::vector<bool> seen(n, false);
    for (int32_t k : keys) {
        if (k < 1 || static_cast<size_t>(k) > n)
            throw std::invalid_argument("Permutation: key " + std::to_string(k) +
                                        " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(k) - 1])
            throw std::invalid_argument("Permutation: duplicate key " + std::to_string(k));
        seen[static_cast<size_t>(k) - 1] = true;
    }
    return Permutation(std::move(keys));
}

int Permutation::position_of(int32_t key) const {
    for (size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] == key) return static_cast<int>(i) + 1;
    throw std::invalid_argument("Permutation: key " + std::to_string(key) + " not present");
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] != static_cast<int32_t>(i) + 1) return false;
    return true;
}

Permutation random_permutation(int n, Seed seed) {
    if (n < 1) throw std::invalid_argument("random_permutation: n must be >= 1");
    std::vector<int32_t> keys(static_cast<size_t>(n));
    std::iota(keys.begin(), keys.end(), 1);
    SplitMix64 gen(seed.value);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(gen.below(static_cast<uint64_t>(i) + 1));
        std::swap(keys[static_cast<size_t>(i)], keys[static_cast<size_t>(j)]);
    }
    return Permutation::unchecked(std::move(keys));
}

uint64_t count_inversions(std::vector<int32_t> v) {
    const size_t n = v.size();
    if (n < 2) return 0;
    std::vector<int32_t> buf(n);
    uint64_t inv = 0;
    for (size_t width = 1; width < n; width *= 2) {
        for (size_t lo = 0; lo + width < n; lo += 2 * width) {
            const size_t mid = lo + width;
            const size_t hi = std::min(lo + 2 * width, n);
            size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (v[j] < v[i]) {
                    inv += mid - i;
                    buf[k++] = v[j++];
                } else {
                    buf[k++] = v[i++];
                }
            }
            while (i < mid) buf[k++] = v[i++];
            while (j < hi) buf[k++] = v[j++];
            std::copy(buf.begin() + static_cast<ptrdiff_t>(lo),
                      buf.begin() + static_cast<ptrdiff_t>(hi),
                      v.begin() + static_cast<ptrdiff_t>(lo));
        }
    }
    return inv;
}

uint64_t inversion_count(const Permutation& p) {
    return count_inversions(p.keys());
}

namespace detail {

uint64_t chain_inversions_raw(const std::vector<int32_t>& keys, int h) {
    const size_t n = keys.size();
    if (h == 1) return count_inversions(keys);
    uint64_t total = 0;
    std::vector<int32_t> chain;
    for (size_t c = 0; c < static_cast<size_t>(h); ++c) {
        chain.clear();
        for (size_t pos = c; pos < n; pos += static_cast<size_t>(h)) chain.push_back(keys[pos]);
        total += count_inversions(chain);
    }
    return total;
}

}  // namespace detail

uint64_t chain_inversions(const Permutation& p, int h) {
    if (h < 1 || h > p.size())
        throw std::invalid_argument("chain_inversions: h must satisfy 1 <= h <= n");
    return detail::chain_inversions_raw(p.keys(), h);
}

PermutationEnumerator::PermutationEnumerator(int n) {
    if (n < 1) throw std::invalid_argument("PermutationEnumerator: n must be >= 1");
    if (n > kMaxEnumN)
        throw guard_error("PermutationEnumerator: n > " + std::to_string(kMaxEnumN) +
                          " would enumerate too many permutations");
    keys_.resize(static_cast<size_t>(n));
    std::iota(keys_.begin(), keys_.end(), 1);
}

std::optional<Permutation> PermutationEnumerator::next() {
    if (done_) return std::nullopt;
    if (!first_ && !std::next_permutation(keys_.begin(), keys_.end())) {
        done_ = true;
        return std::nullopt;
    }
    first_ = false;
    return Permutation::unchecked(keys_);
}

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

}  // namespace sslab
