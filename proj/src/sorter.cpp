#include "sslab/sorter.hpp"

#include <stdexcept>
#include <string>

namespace sslab {

PassOutcome run_pass(const Permutation& p, int h) {
    const int n = p.size();
    if (h < 1 || h >= n)
        throw std::invalid_argument("run_pass: h must satisfy 1 <= h < n");
    std::vector<int32_t> a = p.keys();
    std::vector<int32_t> moves_by_key(static_cast<size_t>(n), 0);
    std::vector<std::pair<int32_t, int32_t>> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int32_t> chain;
    detail::h_pass(a, h, chain, [&](int32_t key, int32_t moved) {
        moves_by_key[static_cast<size_t>(key) - 1] = moved;
        order.emplace_back(key, moved);
    });
    return PassOutcome{Permutation::unchecked(std::move(a)), std::move(moves_by_key),
                       std::move(order)};
}

uint64_t SortTrace::pass_sum(int pass) const {
    uint64_t sum = 0;
    for (const auto& [key, moved] : pass_orders[static_cast<size_t>(pass) - 1])
        sum += static_cast<uint64_t>(moved);
    return sum;
}

std::vector<int64_t> SortTrace::per_key_totals() const {
    const int p = increments.passes();
    std::vector<int64_t> totals(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= p; ++k)
            totals[static_cast<size_t>(i) - 1] += move_count(i, k);
    return totals;
}

SortTrace shellsort(const Permutation& p, const IncrementSequence& H,
                    const TraceOptions& opts) {
    const int n = p.size();
    if (H.n() != n)
        throw std::invalid_argument("shellsort: increment sequence was built for n = " +
                                    std::to_string(H.n()) + ", got n = " + std::to_string(n));
    const int passes = H.passes();
    SortTrace t{n, H, {}, {}, {}, 0};
    t.moves.assign(static_cast<size_t>(n) * static_cast<size_t>(passes), 0);
    t.pass_orders.resize(static_cast<size_t>(passes));
    if (opts.keep_snapshots) {
        t.snapshots.reserve(static_cast<size_t>(passes) + 1);
        t.snapshots.push_back(p);
    }

    std::vector<int32_t> a = p.keys();
    std::vector<int32_t> chain;
    for (int k = 1; k <= passes; ++k) {
        const int h = H.at(k);
        uint64_t expected = 0;
        if (opts.check_pass_sums) expected = detail::chain_inversions_raw(a, h);
        auto& order = t.pass_orders[static_cast<size_t>(k) - 1];
        order.reserve(static_cast<size_t>(n));
        const uint64_t sum = detail::h_pass(a, h, chain, [&](int32_t key, int32_t moved) {
            t.moves[static_cast<size_t>(key - 1) * static_cast<size_t>(passes) +
                    static_cast<size_t>(k - 1)] = moved;
            order.emplace_back(key, moved);
        });
        if (opts.check_pass_sums) {
            if (sum != expected)
                throw std::logic_error("shellsort: pass " + std::to_string(k) +
                                       " move total " + std::to_string(sum) +
                                       " != chain inversions " + std::to_string(expected));
            ++t.passes_checked;
        }
        if (opts.keep_snapshots) t.snapshots.push_back(Permutation::unchecked(a));
    }
    return t;
}

uint64_t total_inversions(const SortTrace& t) {
    uint64_t total = 0;
    for (int32_t m : t.moves) total += static_cast<uint64_t>(m);
    return total;
}

SortStats shellsort_stats(const Permutation& p, const IncrementSequence& H,
                          bool check_pass_sums) {
    const int n = p.size();
    if (H.n() != n)
        throw std::invalid_argument("shellsort_stats: increment sequence was built for n = " +
                                    std::to_string(H.n()) + ", got n = " + std::to_string(n));
    SortStats s;
    s.per_pass.reserve(static_cast<size_t>(H.passes()));
    std::vector<int32_t> a = p.keys();
    std::vector<int32_t> chain;
    for (int k = 1; k <= H.passes(); ++k) {
        const int h = H.at(k);
        uint64_t expected = 0;
        if (check_pass_sums) expected = detail::chain_inversions_raw(a, h);
        const uint64_t sum = detail::h_pass(a, h, chain, [](int32_t, int32_t) {});
        if (check_pass_sums) {
            if (sum != expected)
                throw std::logic_error("shellsort_stats: pass " + std::to_string(k) +
                                       " move total " + std::to_string(sum) +
                                       " != chain inversions " + std::to_string(expected));
            ++s.passes_checked;
        }
        s.per_pass.push_back(sum);
        s.total += sum;
    }
    s.sorted = std::is_sorted(a.begin(), a.end());
    return s;
}

nlohmann::json trace_to_json(const SortTrace& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["increments"] = t.increments.h();
    j["moves"] = t.moves;  // row-major by key
    if (!t.snapshots.empty()) {
        nlohmann::json snaps = nlohmann::json::array();
        for (const auto& s : t.snapshots) snaps.push_back(s.keys());
        j["snapshots"] = std::move(snaps);
    }
    return j;
}

}  // namespace sslab
