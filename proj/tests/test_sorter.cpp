#include "doctest.h"
#include "oracles.hpp"
#include "sslab/sorter.hpp"

using namespace sslab;

namespace {

IncrementSequence seq(std::vector<int32_t> h, int n) {
    return IncrementSequence::validate(std::move(h), n);
}

std::vector<IncrementSequence> suite_seqs(int n) {
    std::vector<IncrementSequence> out;
    for (std::vector<int32_t> h : {std::vector<int32_t>{2, 1}, {3, 1}, {4, 2, 1}})
        if (h.front() < n) out.push_back(seq(std::move(h), n));
    return out;
}

}  // namespace

TEST_CASE("run_pass hand-simulated examples") {
    const auto r = run_pass(Permutation::from_keys({4, 3, 2, 1}), 2);
    CHECK(r.after.keys() == std::vector<int32_t>{2, 1, 4, 3});
    CHECK(r.moves_by_key == std::vector<int32_t>{1, 1, 0, 0});
    // Chains in index order, each left to right.
    const std::vector<std::pair<int32_t, int32_t>> order{{4, 0}, {2, 1}, {3, 0}, {1, 1}};
    CHECK(r.order == order);

    const auto sorted = run_pass(Permutation::identity(6), 3);
    CHECK(sorted.after.is_identity());
    CHECK(sorted.moves_by_key == std::vector<int32_t>(6, 0));

    const auto one = run_pass(Permutation::from_keys({3, 1, 2}), 1);
    CHECK(one.after.is_identity());
    CHECK(one.moves_by_key == std::vector<int32_t>{1, 1, 0});
    CHECK(sslab_test::pair_scan_inversions({3, 1, 2}) == 2);

    CHECK_THROWS_AS(run_pass(Permutation::identity(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(run_pass(Permutation::identity(4), 4), std::invalid_argument);
}

TEST_CASE("shellsort trace on hand-simulated examples") {
    const auto H = seq({2, 1}, 4);
    const SortTrace t =
        shellsort(Permutation::from_keys({4, 3, 2, 1}), H, TraceOptions{true, true});
    CHECK(total_inversions(t) == 4);
    CHECK(t.pass_sum(1) == 2);
    CHECK(t.pass_sum(2) == 2);
    REQUIRE(t.snapshots.size() == 3);
    CHECK(t.snapshots[0].keys() == std::vector<int32_t>{4, 3, 2, 1});
    CHECK(t.snapshots[1].keys() == std::vector<int32_t>{2, 1, 4, 3});
    CHECK(t.snapshots[2].is_identity());
    CHECK(t.passes_checked == 2);

    const SortTrace id = shellsort(Permutation::identity(4), H);
    CHECK(total_inversions(id) == 0);

    const SortTrace t3 = shellsort(Permutation::from_keys({3, 2, 1}), seq({2, 1}, 3));
    CHECK(total_inversions(t3) == 1);
    CHECK(t3.move_count(1, 1) == 1);  // key 1 moves once in pass 1
    CHECK(t3.move_count(1, 2) == 0);
}

TEST_CASE("single h=1 pass equals the inversion count") {
    for (int t = 0; t < 100; ++t) {
        const Permutation p = random_permutation(50, Seed{static_cast<uint64_t>(t)});
        const SortTrace tr = shellsort(p, seq({1}, 50));
        CHECK(total_inversions(tr) == inversion_count(p));
    }
}

TEST_CASE("exhaustive sortedness and pass-sum oracle, n <= 7") {
    uint64_t unsorted = 0, bad_snapshot = 0, runs = 0;
    for (int n = 3; n <= 7; ++n) {
        for (const auto& H : suite_seqs(n)) {
            for_each_permutation(n, [&](const std::vector<int32_t>& keys) {
                // check_pass_sums compares every pass against chain_inversions.
                const SortTrace t = shellsort(Permutation::unchecked(keys), H,
                                              TraceOptions{true, true});
                ++runs;
                if (!t.snapshots.back().is_identity()) ++unsorted;
                for (const auto& snap : t.snapshots) {
                    try {
                        Permutation::from_keys(snap.keys());
                    } catch (const std::invalid_argument&) {
                        ++bad_snapshot;
                    }
                }
            });
        }
    }
    CHECK(runs > 0);
    CHECK(unsorted == 0);
    CHECK(bad_snapshot == 0);
}

TEST_CASE("random sortedness across all families up to n = 10^4") {
    const std::vector<std::pair<int, int>> plan{
        {16, 500}, {64, 400}, {256, 250}, {1024, 80}, {4096, 15}, {10000, 5}};
    uint64_t runs = 0, unsorted = 0, mismatched = 0;
    for (Family f : generated_families()) {
        uint64_t stream = 0;
        for (const auto& [n, trials] : plan) {
            IncrementSequence H = generate(f, n);
            for (int t = 0; t < trials; ++t) {
                const Permutation p =
                    random_permutation(n, Seed{0xABCD0000u + stream * 1000 + t});
                try {
                    const SortStats s = shellsort_stats(p, H, true);
                    ++runs;
                    if (!s.sorted) ++unsorted;
                    if (s.passes_checked != H.passes()) ++mismatched;
                } catch (const std::logic_error&) {
                    ++mismatched;
                }
            }
            ++stream;
        }
    }
    CHECK(runs == 10000);
    CHECK(unsorted == 0);
    CHECK(mismatched == 0);
}

TEST_CASE("trace serializes to JSON") {
    const auto H = seq({2, 1}, 4);
    const SortTrace t =
        shellsort(Permutation::from_keys({4, 3, 2, 1}), H, TraceOptions{true, true});
    const nlohmann::json j = trace_to_json(t);
    CHECK(j["n"] == 4);
    CHECK(j["increments"] == nlohmann::json::array({2, 1}));
    CHECK(j["moves"].size() == 8);  // row-major by key
    CHECK(j["snapshots"].size() == 3);

    const SortTrace lean = shellsort(Permutation::from_keys({4, 3, 2, 1}), H);
    CHECK_FALSE(trace_to_json(lean).contains("snapshots"));
}

TEST_CASE("moves matrix layout is row-major by key") {
    const auto H = seq({2, 1}, 4);
    const SortTrace t = shellsort(Permutation::from_keys({4, 3, 2, 1}), H);
    // Pass 1 moved keys 1 and 2; pass 2 moved keys 1 and 3.
    CHECK(t.move_count(1, 1) == 1);
    CHECK(t.move_count(2, 1) == 1);
    CHECK(t.move_count(3, 1) == 0);
    CHECK(t.move_count(4, 1) == 0);
    CHECK(t.move_count(1, 2) == 1);
    CHECK(t.move_count(3, 2) == 1);
    CHECK(t.moves == std::vector<int32_t>{1, 1, 1, 0, 0, 1, 0, 0});
    CHECK(t.per_key_totals() == std::vector<int64_t>{2, 1, 1, 0});
}
