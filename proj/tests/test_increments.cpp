#include <cmath>
#include <set>

#include "doctest.h"
#include "sslab/increments.hpp"

using namespace sslab;

namespace {

std::vector<int32_t> gen(Family f, int n) { return generate(f, n).h(); }

}  // namespace

TEST_CASE("family generators match their defining rules") {
    CHECK(gen(Family::shell, 16) == std::vector<int32_t>{8, 4, 2, 1});
    CHECK(gen(Family::hibbard, 100) == std::vector<int32_t>{63, 31, 15, 7, 3, 1});
    CHECK(gen(Family::pratt_log3, 30) == std::vector<int32_t>{13, 4, 1});
    CHECK(gen(Family::pratt_2i3j, 20) == std::vector<int32_t>{9, 8, 6, 4, 3, 2, 1});
    CHECK(gen(Family::knuth2, 1000) == std::vector<int32_t>{10, 1});
}

TEST_CASE("papernov_stasevich closing term") {
    // n/2^k + 1 closes at 2, so a final 1-pass is appended.
    CHECK(gen(Family::papernov_stasevich, 16) == std::vector<int32_t>{9, 5, 3, 2, 1});
    CHECK(gen(Family::papernov_stasevich, 100) ==
          std::vector<int32_t>{51, 26, 13, 7, 4, 2, 1});
}

TEST_CASE("hibbard includes the boundary 2^k - 1 == n - 1") {
    CHECK(gen(Family::hibbard, 8).front() == 7);
    CHECK(gen(Family::hibbard, 7).front() == 3);  // 7 itself is not below n
}

TEST_CASE("validate accepts and rejects with distinct codes") {
    CHECK_NOTHROW(IncrementSequence::validate({4, 2, 1}, 8));

    auto code_of = [](std::vector<int32_t> h, int n) {
        try {
            IncrementSequence::validate(std::move(h), n);
        } catch (const sequence_error& e) {
            return e.which();
        }
        throw std::runtime_error("expected rejection");
    };
    CHECK(code_of({4, 4, 1}, 8) == sequence_error::code::not_decreasing);
    CHECK(code_of({4, 2}, 8) == sequence_error::code::last_not_one);
    CHECK(code_of({8, 2, 1}, 8) == sequence_error::code::first_not_below_n);
    CHECK(code_of({9, 2, 1}, 8) == sequence_error::code::first_not_below_n);
    CHECK(code_of({}, 8) == sequence_error::code::empty);
    CHECK(code_of({4, 0, 1}, 8) == sequence_error::code::non_positive);
}

TEST_CASE("every generated sequence passes validation") {
    const std::vector<int> grid{4, 5, 8, 10, 16, 30, 100, 1000, 4096, 65536, 1000000};
    for (Family f : generated_families()) {
        for (int n : grid) {
            try {
                const IncrementSequence H = generate(f, n);
                CHECK(H.h().front() < n);
                CHECK(H.h().back() == 1);
                CHECK_NOTHROW(IncrementSequence::validate(H.h(), n));
            } catch (const infeasible_error&) {
                // Allowed for small n; the rule must hold by n = 100.
                CHECK(n < 100);
            }
        }
    }
}

TEST_CASE("pratt_2i3j contains exactly the 3-smooth numbers below n/2") {
    for (int n : {10, 20, 100, 1000, 12345}) {
        const auto h = gen(Family::pratt_2i3j, n);
        std::set<int32_t> want;
        for (int32_t v = 1; v < n / 2; ++v) {
            int32_t r = v;
            while (r % 2 == 0) r /= 2;
            while (r % 3 == 0) r /= 3;
            if (r == 1) want.insert(v);
        }
        std::set<int32_t> got(h.begin(), h.end());
        CHECK(got == want);
        CHECK(h.size() == got.size());  // no duplicates
        CHECK(std::is_sorted(h.rbegin(), h.rend()));
    }
}

TEST_CASE("real-exponent families stay within a factor 2 of their target") {
    struct Target {
        Family f;
        std::vector<double> exps;
    };
    const std::vector<Target> targets = {
        {Family::knuth2, {1.0 / 3.0}},
        {Family::jk3, {7.0 / 15.0, 1.0 / 5.0}},
        {Family::jk3_conjecture, {1.0 / 2.0, 1.0 / 4.0}},
    };
    for (const auto& [f, exps] : targets) {
        for (int n : {1000, 10000, 100000, 1000000}) {
            const auto h = gen(f, n);
            REQUIRE(h.size() == exps.size() + 1);
            for (size_t k = 0; k < exps.size(); ++k) {
                const double ratio = h[k] / std::pow(n, exps[k]);
                CHECK(ratio >= 0.5);
                CHECK(ratio <= 2.0);
            }
        }
    }
}

TEST_CASE("jk3 enforces gcd(h1, h2) == 1") {
    for (int n : {100, 1000, 5000, 10000, 50000, 100000, 1000000}) {
        const auto h = gen(Family::jk3, n);
        REQUIRE(h.size() == 3);
        CHECK(std::gcd(h[0], h[1]) == 1);
        CHECK(h[0] > h[1]);
        CHECK(h[1] > 1);
    }
}

TEST_CASE("family names round-trip") {
    for (Family f : generated_families()) {
        const auto parsed = parse_family(to_string(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK(parse_family("custom") == Family::custom);
    CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("generator errors") {
    CHECK_THROWS_AS(generate(Family::shell, 3), infeasible_error);
    CHECK_THROWS_AS(generate(Family::jk3_conjecture, 4), infeasible_error);
    CHECK_THROWS_AS(generate(Family::custom, 100), std::invalid_argument);
}
