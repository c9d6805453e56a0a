#include <array>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/permutation.hpp"

using namespace sslab;

TEST_CASE("permutation construction validates keys") {
    CHECK_NOTHROW(Permutation::from_keys({3, 1, 2}));
    CHECK_THROWS_AS(Permutation::from_keys({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_keys({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_keys({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_keys({1, 2, 4}), std::invalid_argument);

    const Permutation p = Permutation::from_keys({3, 1, 2});
    CHECK(p.size() == 3);
    CHECK(p.key_at(1) == 3);
    CHECK(p.position_of(3) == 1);
    CHECK_FALSE(p.is_identity());
    CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("random_permutation basics") {
    CHECK(random_permutation(1, Seed{12345}).keys() == std::vector<int32_t>{1});
    CHECK_THROWS_AS(random_permutation(0, Seed{1}), std::invalid_argument);

    // Determinism: identical (n, seed) yields identical output.
    const Seed s{987654321};
    CHECK(random_permutation(5, s) == random_permutation(5, s));
    CHECK(random_permutation(1000, s) == random_permutation(1000, s));
}

TEST_CASE("random_permutation is uniform on S_3") {
    // 60000 distinct seeds; each of the 6 arrangements within 1/6 +- 0.01.
    std::map<std::vector<int32_t>, int> freq;
    const int trials = 60000;
    for (int s = 0; s < trials; ++s)
        ++freq[random_permutation(3, Seed{static_cast<uint64_t>(s)}).keys()];
    CHECK(freq.size() == 6);
    for (const auto& [keys, count] : freq) {
        const double f = static_cast<double>(count) / trials;
        CHECK(f == doctest::Approx(1.0 / 6.0).epsilon(0.06));  // 1/6 +- 0.01 absolute
        CHECK(std::abs(f - 1.0 / 6.0) < 0.01);
    }
}

TEST_CASE("inversion_count on fixed examples") {
    CHECK(inversion_count(Permutation::from_keys({1, 2, 3, 4})) == 0);
    CHECK(inversion_count(Permutation::from_keys({4, 3, 2, 1})) == 6);
    const std::vector<int32_t> v{3, 1, 2};
    CHECK(sslab_test::pair_scan_inversions(v) == 2);
    CHECK(inversion_count(Permutation::from_keys(v)) == 2);
}

TEST_CASE("inversion_count matches the pair-scan oracle") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](const std::vector<int32_t>& keys) {
            CHECK(count_inversions(keys) == sslab_test::pair_scan_inversions(keys));
        });
    }
    for (int t = 0; t < 1000; ++t) {
        const Permutation p = random_permutation(1000, Seed{static_cast<uint64_t>(t)});
        CHECK(inversion_count(p) == sslab_test::pair_scan_inversions(p.keys()));
    }
}

TEST_CASE("chain_inversions") {
    const Permutation rev = Permutation::from_keys({4, 3, 2, 1});
    // Chains (4,2) and (3,1): one inversion each.
    CHECK(chain_inversions(rev, 2) == 2);

    for (int t = 0; t < 50; ++t) {
        const Permutation p = random_permutation(40, Seed{static_cast<uint64_t>(t)});
        CHECK(chain_inversions(p, 1) == inversion_count(p));
        CHECK(chain_inversions(p, p.size()) == 0);
    }
    CHECK_THROWS_AS(chain_inversions(rev, 0), std::invalid_argument);
    CHECK_THROWS_AS(chain_inversions(rev, 5), std::invalid_argument);

    // Cross-check against a by-hand chain extraction on random cases.
    for (int t = 0; t < 20; ++t) {
        const Permutation p = random_permutation(37, Seed{1000 + static_cast<uint64_t>(t)});
        for (int h : {2, 3, 5, 7, 36, 37}) {
            uint64_t expected = 0;
            for (int c = 0; c < h; ++c) {
                std::vector<int32_t> chain;
                for (int pos = c; pos < 37; pos += h) chain.push_back(p.keys()[pos]);
                expected += sslab_test::pair_scan_inversions(chain);
            }
            CHECK(chain_inversions(p, h) == expected);
        }
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
    PermutationEnumerator one(1);
    CHECK(one.next()->keys() == std::vector<int32_t>{1});
    CHECK_FALSE(one.next().has_value());

    PermutationEnumerator three(3);
    std::vector<std::vector<int32_t>> all;
    while (auto p = three.next()) all.push_back(p->keys());
    CHECK(all.size() == 6);
    CHECK(all.front() == std::vector<int32_t>{1, 2, 3});
    CHECK(all.back() == std::vector<int32_t>{3, 2, 1});

    uint64_t count = 0;
    for_each_permutation(7, [&](const std::vector<int32_t>&) { ++count; });
    CHECK(count == 5040);
    CHECK(factorial(7) == 5040);

    CHECK_THROWS_AS(PermutationEnumerator(11), guard_error);
    CHECK_THROWS_AS(for_each_permutation(11, [](const auto&) {}), guard_error);
    CHECK_THROWS_AS(PermutationEnumerator(0), std::invalid_argument);
}
