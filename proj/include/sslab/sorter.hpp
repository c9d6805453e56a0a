#pragma once

#include <cstdint>
#include <cstring>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sslab/increments.hpp"
#include "sslab/permutation.hpp"

namespace sslab {

// One gapped insertion pass. moves_by_key[i-1] is the number of chain
// positions key i moved toward the front (its insertion-path length); order
// lists (key, moves) pairs in exact processing order: chains 1..h, each
// left to right.
struct PassOutcome {
    Permutation after;
    std::vector<int32_t> moves_by_key;
    std::vector<std::pair<int32_t, int32_t>> order;
};

PassOutcome run_pass(const Permutation& p, int h);

struct TraceOptions {
    bool keep_snapshots = false;
    // Compares each pass's move total against the chain-inversion count of the
    // pass's input; a mismatch throws std::logic_error.
    bool check_pass_sums = true;
};

// Full record of an instrumented sort: the move-count matrix m_{i,k}, the
// per-pass processing orders, and optionally the intermediate permutations.
struct SortTrace {
    int n = 0;
    IncrementSequence increments;
    // Row-major by key: moves[(i-1)*p + (k-1)] = m_{i,k}.
    std::vector<int32_t> moves;
    // pass_orders[k-1] = (key, moves) pairs in the processing order of pass k.
    std::vector<std::vector<std::pair<int32_t, int32_t>>> pass_orders;
    // pi_0..pi_p when TraceOptions::keep_snapshots is set, else empty.
    std::vector<Permutation> snapshots;
    int passes_checked = 0;

    int32_t move_count(int key, int pass) const {
        return moves[static_cast<size_t>(key - 1) * static_cast<size_t>(increments.passes()) +
                     static_cast<size_t>(pass - 1)];
    }
    uint64_t pass_sum(int pass) const;
    std::vector<int64_t> per_key_totals() const;
};

SortTrace shellsort(const Permutation& p, const IncrementSequence& H,
                    const TraceOptions& opts = {});

uint64_t total_inversions(const SortTrace& t);

// Lean path for large runs: keeps only per-pass totals.
struct SortStats {
    uint64_t total = 0;
    std::vector<uint64_t> per_pass;
    int passes_checked = 0;
    bool sorted = false;
};

SortStats shellsort_stats(const Permutation& p, const IncrementSequence& H,
                          bool check_pass_sums = true);

nlohmann::json trace_to_json(const SortTrace& t);

namespace detail {

// Insertion-sorts each h-chain of a in place; sink(key, moved) is called in
// processing order. scratch is reused chain storage. Returns the pass total.
template <typename Sink>
uint64_t h_pass(std::vector<int32_t>& a, int h, std::vector<int32_t>& chain, Sink&& sink) {
    const size_t n = a.size();
    const size_t stride = static_cast<size_t>(h);
    uint64_t pass_total = 0;
    for (size_t c = 0; c < stride; ++c) {
        chain.clear();
        for (size_t pos = c; pos < n; pos += stride) chain.push_back(a[pos]);
        const size_t len = chain.size();
        for (size_t j = 0; j < len; ++j) {
            const int32_t key = chain[j];
            size_t dst = j;
            while (dst > 0 && chain[dst - 1] > key) --dst;
            if (dst != j) {
                std::memmove(&chain[dst + 1], &chain[dst], (j - dst) * sizeof(int32_t));
                chain[dst] = key;
            }
            pass_total += j - dst;
            sink(key, static_cast<int32_t>(j - dst));
        }
        size_t i = 0;
        for (size_t pos = c; pos < n; pos += stride) a[pos] = chain[i++];
    }
    return pass_total;
}

}  // namespace detail

}  // namespace sslab
