#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "sslab/errors.hpp"

namespace sslab {

struct Seed {
    uint64_t value = 0;
};

// Largest n for which exhaustive enumeration of all n! permutations is allowed.
inline constexpr int kMaxEnumN = 10;

// A permutation of the keys 1..n. All interfaces are 1-indexed (positions and
// keys); storage is 0-indexed.
class Permutation {
public:
    static Permutation identity(int n);

    // Checks that keys is a rearrangement of 1..n; throws std::invalid_argument.
    static Permutation from_keys(std::vector<int32_t> keys);

    // Caller guarantees the invariant.
    static Permutation unchecked(std::vector<int32_t> keys) {
        return Permutation(std::move(keys));
    }

    int size() const { return static_cast<int>(keys_.size()); }

    // Key at position pos, pos in 1..n.
    int32_t key_at(int pos) const { return keys_[pos - 1]; }

    // Position of key, O(n).
    int position_of(int32_t key) const;

    const std::vector<int32_t>& keys() const { return keys_; }

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int32_t> keys) : keys_(std::move(keys)) {}

    std::vector<int32_t> keys_;
};

// Uniform permutation of 1..n, deterministic in (n, seed). n >= 1.
Permutation random_permutation(int n, Seed seed);

// Number of out-of-order pairs, O(n log n) merge count.
uint64_t inversion_count(const Permutation& p);

// Sum of within-chain inversion counts over the h-chains (positions congruent
// mod h). 1 <= h <= n; chain_inversions(p, 1) == inversion_count(p).
uint64_t chain_inversions(const Permutation& p, int h);

// Merge-count of inversions in an arbitrary integer sequence.
uint64_t count_inversions(std::vector<int32_t> values);

namespace detail {
uint64_t chain_inversions_raw(const std::vector<int32_t>& keys, int h);
}

// Streams all n! permutations of 1..n in lexicographic order. n <= kMaxEnumN.
class PermutationEnumerator {
public:
    explicit PermutationEnumerator(int n);

    std::optional<Permutation> next();

private:
    std::vector<int32_t> keys_;
    bool done_ = false;
    bool first_ = true;
};

// Callback form of the enumeration; fn(const std::vector<int32_t>&) sees each
// arrangement exactly once, in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
    if (n > kMaxEnumN)
        throw guard_error("for_each_permutation: n > " + std::to_string(kMaxEnumN) +
                          " would enumerate too many permutations");
    std::vector<int32_t> keys(static_cast<size_t>(n));
    std::iota(keys.begin(), keys.end(), 1);
    do {
        fn(static_cast<const std::vector<int32_t>&>(keys));
    } while (std::next_permutation(keys.begin(), keys.end()));
}

uint64_t factorial(int n);

}  // namespace sslab
