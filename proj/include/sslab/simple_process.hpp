#pragma once

#include <cstdint>
#include <vector>

#include "sslab/increments.hpp"
#include "sslab/permutation.hpp"
#include "sslab/sorter.hpp"

namespace sslab {

// Exact ratio, reduced, den > 0.
struct Fraction {
    int64_t num = 0;
    int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(int64_t num, int64_t den);

// Digit bounds (h_0/h_1, ..., h_{p-1}/h_p) with h_0 = n.
std::vector<Fraction> digit_bounds(const IncrementSequence& H, int n);

// Largest legal digit for pass k: the greatest integer strictly below
// h_{k-1}/h_k.
int32_t max_digit(const IncrementSequence& H, int n, int pass);

struct RadixDigits {
    std::vector<int32_t> digits;   // d_1..d_p
    std::vector<int32_t> radices;  // h_1..h_p
    int n = 0;                     // h_0
};

// Greedy most-significant-first decomposition of d in [0, n-1]:
// d = sum_k digits[k] * h_k with digits[k] < h_{k-1}/h_k.
RadixDigits mixed_radix_encode(int64_t d, const IncrementSequence& H, int n);

// Inverse of mixed_radix_encode on its image; rejects digit-bound violations
// with std::domain_error.
int64_t mixed_radix_decode(const RadixDigits& digits);

// A schedule of per-key, per-pass move counts for the simple process.
struct MinorSchedule {
    int n = 0;
    IncrementSequence increments;
    // Row-major by key: digits[(i-1)*p + (k-1)].
    std::vector<int32_t> digits;

    static MinorSchedule zeros(int n, IncrementSequence H);

    int32_t at(int key, int pass) const {
        return digits[static_cast<size_t>(key - 1) * static_cast<size_t>(increments.passes()) +
                      static_cast<size_t>(pass - 1)];
    }
    int32_t& at(int key, int pass) {
        return digits[static_cast<size_t>(key - 1) * static_cast<size_t>(increments.passes()) +
                      static_cast<size_t>(pass - 1)];
    }
    uint64_t total() const;
    std::vector<int64_t> per_key_totals() const;  // T_i
};

// Runs the simple process: passes k = 1..p; within a pass, keys are taken in
// the sorter's processing order, and each actively moves at(key, k) chain
// positions toward the front, shifting the displaced block back. A count
// exceeding the key's chain position throws bound_violation.
Permutation simple_apply(const Permutation& p, const IncrementSequence& H,
                         const MinorSchedule& schedule);

// Exhaustive search over all legal schedules that sort p; returns the one
// with the least total, first in depth-first decision order among minima
// (decisions in processing order, smaller counts first). n <= 6, p <= 3.
MinorSchedule minor_oracle(const Permutation& p, const IncrementSequence& H);

inline constexpr int kOracleMaxN = 6;
inline constexpr int kOracleMaxPasses = 3;

// Closed-form schedule: each key's digits are the greedy mixed-radix
// decomposition of its leftward displacement max{j - i, 0}. Feasibility under
// simple_apply is not guaranteed; compared against minor_oracle empirically.
MinorSchedule minor_candidate(const Permutation& p, const IncrementSequence& H);

// Converts a sort trace's move matrix into a schedule (always feasible).
MinorSchedule schedule_from_trace(const SortTrace& t);

}  // namespace sslab
