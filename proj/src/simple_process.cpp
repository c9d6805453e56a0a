#include "sslab/simple_process.hpp"

#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sslab {

Fraction make_fraction(int64_t num, int64_t den) {
    if (den <= 0) throw std::invalid_argument("make_fraction: denominator must be positive");
    const int64_t g = std::gcd(num, den);
    return Fraction{num / g, den / g};
}

std::vector<Fraction> digit_bounds(const IncrementSequence& H, int n) {
    if (H.n() != n)
        throw std::invalid_argument("digit_bounds: sequence built for different n");
    std::vector<Fraction> bounds;
    bounds.reserve(static_cast<size_t>(H.passes()));
    for (int k = 1; k <= H.passes(); ++k)
        bounds.push_back(make_fraction(H.with_h0(k - 1), H.at(k)));
    return bounds;
}

int32_t max_digit(const IncrementSequence& H, int n, int pass) {
    // Greatest integer strictly below h_{k-1}/h_k.
    const int64_t prev = H.with_h0(pass - 1);
    const int64_t cur = H.at(pass);
    int64_t m = (prev - 1) / cur;
    (void)n;
    return static_cast<int32_t>(m);
}

RadixDigits mixed_radix_encode(int64_t d, const IncrementSequence& H, int n) {
    if (H.n() != n)
        throw std::invalid_argument("mixed_radix_encode: sequence built for different n");
    if (d < 0 || d > n - 1)
        throw std::invalid_argument("mixed_radix_encode: value " + std::to_string(d) +
                                    " outside [0, n-1]");
    RadixDigits out{{}, H.h(), n};
    out.digits.reserve(static_cast<size_t>(H.passes()));
    int64_t rem = d;
    for (int k = 1; k <= H.passes(); ++k) {
        const int64_t hk = H.at(k);
        out.digits.push_back(static_cast<int32_t>(rem / hk));
        rem %= hk;
    }
    return out;
}

int64_t mixed_radix_decode(const RadixDigits& rd) {
    if (rd.digits.size() != rd.radices.size())
        throw std::domain_error("mixed_radix_decode: digit/radix length mismatch");
    int64_t value = 0;
    int64_t prev = rd.n;
    for (size_t k = 0; k < rd.digits.size(); ++k) {
        const int64_t d = rd.digits[k];
        const int64_t hk = rd.radices[k];
        if (d < 0 || d * hk >= prev)
            throw std::domain_error("mixed_radix_decode: digit " + std::to_string(d) +
                                    " violates bound h_" + std::to_string(k) + "/h_" +
                                    std::to_string(k + 1) + " at pass " + std::to_string(k + 1));
        value += d * hk;
        prev = hk;
    }
    return value;
}

MinorSchedule MinorSchedule::zeros(int n, IncrementSequence H) {
    MinorSchedule s{n, std::move(H), {}};
    s.digits.assign(static_cast<size_t>(n) * static_cast<size_t>(s.increments.passes()), 0);
    return s;
}

uint64_t MinorSchedule::total() const {
    uint64_t t = 0;
    for (int32_t d : digits) t += static_cast<uint64_t>(d);
    return t;
}

std::vector<int64_t> MinorSchedule::per_key_totals() const {
    const int p = increments.passes();
    std::vector<int64_t> totals(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= p; ++k) totals[static_cast<size_t>(i) - 1] += at(i, k);
    return totals;
}

Permutation simple_apply(const Permutation& p, const IncrementSequence& H,
                         const MinorSchedule& schedule) {
    const size_t n = static_cast<size_t>(p.size());
    if (schedule.n != p.size() || H.n() != p.size() || schedule.increments.h() != H.h())
        throw std::invalid_argument("simple_apply: schedule dimensions do not match input");
    std::vector<int32_t> a = p.keys();
    std::vector<int32_t> chain;
    for (int k = 1; k <= H.passes(); ++k) {
        const size_t h = static_cast<size_t>(H.at(k));
        for (size_t c = 0; c < h; ++c) {
            chain.clear();
            for (size_t pos = c; pos < n; pos += h) chain.push_back(a[pos]);
            for (size_t j = 0; j < chain.size(); ++j) {
                const int32_t key = chain[j];
                const int32_t l = schedule.at(key, k);
                if (l < 0 || static_cast<size_t>(l) > j)
                    throw bound_violation(key, k,
                                          "simple_apply: key " + std::to_string(key) +
                                              " cannot move " + std::to_string(l) +
                                              " positions from chain position " +
                                              std::to_string(j + 1) + " in pass " +
                                              std::to_string(k));
                if (l > 0) {
                    const size_t dst = j - static_cast<size_t>(l);
                    std::memmove(&chain[dst + 1], &chain[dst],
                                 static_cast<size_t>(l) * sizeof(int32_t));
                    chain[dst] = key;
                }
            }
            size_t i = 0;
            for (size_t pos = c; pos < n; pos += h) a[pos] = chain[i++];
        }
    }
    return Permutation::unchecked(std::move(a));
}

namespace {

// Depth-first search over all legal simple-process schedules. Passes before
// the last branch freely; the final 1-pass is forced, because once two keys
// are both placed their relative order never changes again, so every key must
// insert into its exact sorted slot.
class OracleSearch {
public:
    OracleSearch(int n, const IncrementSequence& H, uint64_t best_bound)
        : n_(n),
          passes_(H.passes()),
          h_(H.h()),
          best_(best_bound),
          digits_(static_cast<size_t>(n) * static_cast<size_t>(H.passes()), 0),
          best_digits_() {}

    void run(const std::vector<int32_t>& start) {
        std::vector<int32_t> a = start;
        search_pass(a, 1, 0);
    }

    bool found() const { return found_; }
    std::vector<int32_t> take_best() { return std::move(best_digits_); }

private:
    size_t idx(int32_t key, int k) const {
        return static_cast<size_t>(key - 1) * static_cast<size_t>(passes_) +
               static_cast<size_t>(k - 1);
    }

    void search_pass(const std::vector<int32_t>& a, int k, uint64_t running) {
        if (k == passes_) {
            finish_last_pass(a, running);
            return;
        }
        const size_t h = static_cast<size_t>(h_[static_cast<size_t>(k) - 1]);
        std::vector<std::vector<int32_t>> chains(h);
        for (size_t c = 0; c < h; ++c)
            for (size_t pos = c; pos < a.size(); pos += h) chains[c].push_back(a[pos]);
        descend(a, k, chains, 0, 0, running);
    }

    void descend(const std::vector<int32_t>& a, int k,
                 std::vector<std::vector<int32_t>>& chains, size_t c, size_t j,
                 uint64_t running) {
        if (c == chains.size()) {
            std::vector<int32_t> merged(a.size());
            const size_t h = chains.size();
            for (size_t cc = 0; cc < h; ++cc) {
                size_t i = 0;
                for (size_t pos = cc; pos < merged.size(); pos += h)
                    merged[pos] = chains[cc][i++];
            }
            search_pass(merged, k + 1, running);
            return;
        }
        if (j == chains[c].size()) {
            descend(a, k, chains, c + 1, 0, running);
            return;
        }
        auto& chain = chains[c];
        const int32_t key = chain[j];
        const std::vector<int32_t> saved = chain;
        for (int32_t l = 0; l <= static_cast<int32_t>(j); ++l) {
            if (running + static_cast<uint64_t>(l) >= best_) break;
            digits_[idx(key, k)] = l;
            if (l > 0) {
                chain = saved;
                const size_t dst = j - static_cast<size_t>(l);
                std::memmove(&chain[dst + 1], &chain[dst],
                             static_cast<size_t>(l) * sizeof(int32_t));
                chain[dst] = key;
            }
            descend(a, k, chains, c, j + 1, running + static_cast<uint64_t>(l));
        }
        chain = saved;
        digits_[idx(key, k)] = 0;
    }

    void finish_last_pass(const std::vector<int32_t>& a, uint64_t running) {
        // h_p = 1: one chain covering the whole list.
        std::vector<int32_t> chain = a;
        std::vector<int32_t> last(static_cast<size_t>(n_), 0);
        uint64_t cost = 0;
        for (size_t j = 0; j < chain.size(); ++j) {
            const int32_t key = chain[j];
            size_t dst = j;
            while (dst > 0 && chain[dst - 1] > key) --dst;
            if (dst != j) {
                std::memmove(&chain[dst + 1], &chain[dst], (j - dst) * sizeof(int32_t));
                chain[dst] = key;
            }
            last[static_cast<size_t>(key) - 1] = static_cast<int32_t>(j - dst);
            cost += j - dst;
        }
        if (running + cost < best_) {
            best_ = running + cost;
            best_digits_ = digits_;
            for (int32_t key = 1; key <= static_cast<int32_t>(n_); ++key)
                best_digits_[idx(key, passes_)] = last[static_cast<size_t>(key) - 1];
            found_ = true;
        }
    }

    int n_;
    int passes_;
    std::vector<int32_t> h_;
    uint64_t best_;
    std::vector<int32_t> digits_;
    std::vector<int32_t> best_digits_;
    bool found_ = false;
};

}  // namespace

MinorSchedule minor_oracle(const Permutation& p, const IncrementSequence& H) {
    const int n = p.size();
    if (H.n() != n)
        throw std::invalid_argument("minor_oracle: sequence built for different n");
    if (n > kOracleMaxN)
        throw guard_error("minor_oracle: n > " + std::to_string(kOracleMaxN));
    if (H.passes() > kOracleMaxPasses)
        throw guard_error("minor_oracle: more than " + std::to_string(kOracleMaxPasses) +
                          " passes");

    // The real Shellsort schedule is always legal, so its total bounds the search.
    SortTrace t = shellsort(p, H, TraceOptions{false, false});
    OracleSearch search(n, H, total_inversions(t) + 1);
    search.run(p.keys());
    if (!search.found())
        throw std::logic_error("minor_oracle: search found no schedule");
    MinorSchedule s{n, H, search.take_best()};
    return s;
}

MinorSchedule minor_candidate(const Permutation& p, const IncrementSequence& H) {
    const int n = p.size();
    if (H.n() != n)
        throw std::invalid_argument("minor_candidate: sequence built for different n");
    MinorSchedule s = MinorSchedule::zeros(n, H);
    for (int pos = 1; pos <= n; ++pos) {
        const int32_t key = p.key_at(pos);
        const int64_t d = std::max<int64_t>(pos - key, 0);
        if (d == 0) continue;
        const RadixDigits rd = mixed_radix_encode(d, H, n);
        for (int k = 1; k <= H.passes(); ++k)
            s.at(key, k) = rd.digits[static_cast<size_t>(k) - 1];
    }
    return s;
}

MinorSchedule schedule_from_trace(const SortTrace& t) {
    MinorSchedule s{t.n, t.increments, t.moves};
    return s;
}

}  // namespace sslab
