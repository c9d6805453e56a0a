#include "sslab/increments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace sslab {

namespace {

constexpr std::array<Family, 8> kGeneratedFamilies = {
    Family::shell,      Family::papernov_stasevich, Family::hibbard,
    Family::pratt_log3, Family::pratt_2i3j,         Family::knuth2,
    Family::jk3,        Family::jk3_conjecture,
};

// Nearest integer to n^(1/3), settled with integer comparisons.
int64_t round_cbrt(int64_t n) {
    auto cube = [](int64_t x) { return x * x * x; };
    int64_t f = static_cast<int64_t>(std::cbrt(static_cast<double>(n)));
    while (cube(f + 1) <= n) ++f;
    while (f > 0 && cube(f) > n) --f;
    // n^(1/3) < f + 1/2  <=>  8n < (2f+1)^3
    return 8 * n < cube(2 * f + 1) ? f : f + 1;
}

int32_t round_pow(int n, double exponent) {
    return static_cast<int32_t>(std::llround(std::pow(static_cast<double>(n), exponent)));
}

std::vector<int32_t> gen_shell(int n) {
    std::vector<int32_t> h;
    for (int32_t v = n / 2; v > 1; v /= 2) h.push_back(v);
    h.push_back(1);
    return h;
}

std::vector<int32_t> gen_papernov_stasevich(int n) {
    // n/2^k + 1 for k = 1..floor(log2 n); the closing term is always 2, so a
    // final 1-pass is appended to restore h_p = 1.
    std::vector<int32_t> h;
    for (int64_t d = 2; d <= n; d *= 2) {
        h.push_back(static_cast<int32_t>(n / d + 1));
        if (d > n / 2) break;
    }
    if (h.back() != 1) h.push_back(1);
    return h;
}

std::vector<int32_t> gen_hibbard(int n) {
    // 2^k - 1 strictly below n; the boundary 2^k - 1 == n - 1 is included.
    std::vector<int32_t> h;
    for (int64_t v = 1; v < n; v = 2 * v + 1) h.push_back(static_cast<int32_t>(v));
    std::reverse(h.begin(), h.end());
    return h;
}

std::vector<int32_t> gen_pratt_log3(int n) {
    // (3^k - 1)/2 strictly below n.
    std::vector<int32_t> h;
    for (int64_t v = 1; v < n; v = 3 * v + 1) h.push_back(static_cast<int32_t>(v));
    std::reverse(h.begin(), h.end());
    return h;
}

std::vector<int32_t> gen_pratt_2i3j(int n) {
    const int32_t limit = n / 2;  // all 2^i 3^j < floor(n/2)
    std::vector<int32_t> h;
    for (int64_t p3 = 1; p3 < limit; p3 *= 3)
        for (int64_t v = p3; v < limit; v *= 2) h.push_back(static_cast<int32_t>(v));
    std::sort(h.begin(), h.end(), std::greater<>());
    return h;
}

std::vector<int32_t> gen_knuth2(int n) {
    int32_t h1 = static_cast<int32_t>(round_cbrt(n));
    if (h1 < 2)
        throw infeasible_error("knuth2: n = " + std::to_string(n) +
                               " too small for a 2-pass n^(1/3) structure");
    return {h1, 1};
}

std::vector<int32_t> gen_jk3(int n) {
    int32_t h1 = std::max<int32_t>(2, round_pow(n, 7.0 / 15.0));
    int32_t h2 = std::max<int32_t>(2, round_pow(n, 1.0 / 5.0));
    if (h1 <= h2)
        throw infeasible_error("jk3: n = " + std::to_string(n) +
                               " too small for the 3-pass n^(7/15), n^(1/5) structure");
    // Smallest perturbation keeping Theta(n^(7/15)): decrement h1 to the
    // nearest value coprime with h2, never past h2 + 1.
    while (std::gcd(h1, h2) != 1 && h1 > h2 + 1) --h1;
    if (std::gcd(h1, h2) != 1)
        throw infeasible_error("jk3: no coprime h1 above h2 for n = " + std::to_string(n));
    return {h1, h2, 1};
}

std::vector<int32_t> gen_jk3_conjecture(int n) {
    int32_t h1 = std::max<int32_t>(2, round_pow(n, 1.0 / 2.0));
    int32_t h2 = std::max<int32_t>(2, round_pow(n, 1.0 / 4.0));
    if (h1 <= h2)
        throw infeasible_error("jk3_conjecture: n = " + std::to_string(n) +
                               " too small for the 3-pass n^(1/2), n^(1/4) structure");
    return {h1, h2, 1};
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::shell: return "shell";
        case Family::papernov_stasevich: return "papernov_stasevich";
        case Family::hibbard: return "hibbard";
        case Family::pratt_log3: return "pratt_log3";
        case Family::pratt_2i3j: return "pratt_2i3j";
        case Family::knuth2: return "knuth2";
        case Family::jk3: return "jk3";
        case Family::jk3_conjecture: return "jk3_conjecture";
        case Family::custom: return "custom";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kGeneratedFamilies)
        if (to_string(f) == name) return f;
    if (name == "custom") return Family::custom;
    return std::nullopt;
}

std::span<const Family> generated_families() {
    return kGeneratedFamilies;
}

IncrementSequence IncrementSequence::validate(std::vector<int32_t> h, int n) {
    if (h.empty())
        throw sequence_error(sequence_error::code::empty, "increment sequence is empty");
    for (int32_t v : h)
        if (v < 1)
            throw sequence_error(sequence_error::code::non_positive,
                                 "increment " + std::to_string(v) + " is not positive");
    for (size_t k = 1; k < h.size(); ++k)
        if (h[k] >= h[k - 1])
            throw sequence_error(sequence_error::code::not_decreasing,
                                 "increments must be strictly decreasing");
    if (h.back() != 1)
        throw sequence_error(sequence_error::code::last_not_one,
                             "last increment must be 1");
    if (h.front() >= n)
        throw sequence_error(sequence_error::code::first_not_below_n,
                             "h_1 = " + std::to_string(h.front()) +
                                 " must be below n = " + std::to_string(n));
    return IncrementSequence(std::move(h), n);
}

IncrementSequence generate(Family family, int n) {
    if (n < 4) throw infeasible_error("generate: n must be >= 4");
    std::vector<int32_t> h;
    switch (family) {
        case Family::shell: h = gen_shell(n); break;
        case Family::papernov_stasevich: h = gen_papernov_stasevich(n); break;
        case Family::hibbard: h = gen_hibbard(n); break;
        case Family::pratt_log3: h = gen_pratt_log3(n); break;
        case Family::pratt_2i3j: h = gen_pratt_2i3j(n); break;
        case Family::knuth2: h = gen_knuth2(n); break;
        case Family::jk3: h = gen_jk3(n); break;
        case Family::jk3_conjecture: h = gen_jk3_conjecture(n); break;
        case Family::custom:
            throw std::invalid_argument("generate: custom has no generator rule");
    }
    try {
        return IncrementSequence::validate(std::move(h), n);
    } catch (const sequence_error& e) {
        throw infeasible_error(to_string(family) + " at n = " + std::to_string(n) +
                               " produced an invalid sequence: " + e.what());
    }
}

}  // namespace sslab
