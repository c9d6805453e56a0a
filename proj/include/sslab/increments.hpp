#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sslab/errors.hpp"

namespace sslab {

enum class Family {
    shell,
    papernov_stasevich,
    hibbard,
    pratt_log3,
    pratt_2i3j,
    knuth2,
    jk3,
    jk3_conjecture,
    custom,
};

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

// All families with a generator rule (everything except custom).
std::span<const Family> generated_families();

// Strictly decreasing increments h_1 > ... > h_p = 1 with h_1 < n.
class IncrementSequence {
public:
    // Throws sequence_error with a code identifying the violated rule.
    static IncrementSequence validate(std::vector<int32_t> h, int n);

    const std::vector<int32_t>& h() const { return h_; }
    int n() const { return n_; }
    int passes() const { return static_cast<int>(h_.size()); }

    // h_k for k in 1..p.
    int32_t at(int k) const { return h_[static_cast<size_t>(k) - 1]; }

    // h_k with the convention h_0 = n, k in 0..p.
    int32_t with_h0(int k) const { return k == 0 ? n_ : at(k); }

    bool operator==(const IncrementSequence&) const = default;

private:
    IncrementSequence(std::vector<int32_t> h, int n) : h_(std::move(h)), n_(n) {}

    std::vector<int32_t> h_;
    int n_ = 0;
};

// Generates the family's sequence for list size n. n >= 4. Throws
// infeasible_error when the family's pass structure does not fit n.
IncrementSequence generate(Family family, int n);

}  // namespace sslab
