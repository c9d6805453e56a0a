#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sslab/increments.hpp"
#include "sslab/permutation.hpp"
#include "sslab/simple_process.hpp"
#include "sslab/sorter.hpp"

namespace sslab {

// n * sum_k h_{k-1}/h_k with h_0 = n, summed in exact rational arithmetic.
double lower_bound(int n, const IncrementSequence& H);

// A family tag or an explicit custom sequence.
struct SequenceChoice {
    Family family = Family::custom;
    std::optional<std::vector<int32_t>> custom;

    static SequenceChoice of(Family f) { return SequenceChoice{f, std::nullopt}; }
    static SequenceChoice of_custom(std::vector<int32_t> h) {
        return SequenceChoice{Family::custom, std::move(h)};
    }

    IncrementSequence resolve(int n) const;
    std::string label() const;
};

struct ExperimentRecord {
    std::string family;
    int n = 0;
    std::vector<int32_t> increments;
    uint64_t trials = 0;
    uint64_t seed = 0;
    bool exhaustive = false;
    double mean_T = 0, var_T = 0;
    std::vector<double> per_pass_means;
    double lb_value = 0;
    std::string timestamp;
};

void to_json(nlohmann::json& j, const ExperimentRecord& r);
void from_json(const nlohmann::json& j, ExperimentRecord& r);

struct McOptions {
    uint64_t trials = 0;
    Seed seed;
    bool exhaustive = false;  // replaces sampling; exact over all n! inputs
    bool check_pass_sums = true;
    int threads = 0;  // 0 = SHELLSORT_LAB_THREADS or hardware
};

// Mean and variance of the total inversions T over uniform inputs. Sampled
// mode draws `trials` permutations with per-trial seeds derived from
// (seed, n, trial index); exhaustive mode enumerates all n! inputs exactly.
// Results are bit-for-bit reproducible regardless of thread scheduling.
ExperimentRecord mc_estimate(const SequenceChoice& choice, int n, const McOptions& opts);

struct FitResult {
    double exponent = 0;
    double log_coefficient = 0;
    double residual = 0;  // OLS sum of squared residuals in log-log scale
    std::vector<std::pair<double, double>> points;
};

// OLS fit of log2(mean_T) = exponent * log2(n) + log_coefficient.
// Needs >= 4 points with distinct n spanning at least one decade.
FitResult fit_exponent(std::span<const std::pair<double, double>> points);

struct PassAkStats {
    double a_k = 0;
    double arith_mean = 0;  // of the counts
    double geo_mean = 0;    // of max(count, 1)
    int zero_counts = 0;
};

// Per pass: a_k = log2(h_{k-1}/h_k) - (1/n) sum_i log2(max(count_{i,k}, 1)),
// plus the arithmetic/geometric mean pair. Zero counts enter the geometric
// side as 1 and are tallied.
std::vector<PassAkStats> ak_stats(const std::vector<int32_t>& digits_row_major,
                                  const IncrementSequence& H, int n);
std::vector<PassAkStats> ak_stats(const MinorSchedule& s);
std::vector<PassAkStats> ak_stats(const SortTrace& t);

// Expected asymptotic form per family: either mean_T ~ n^exponent or
// mean_T ~ n * log2(n)^log_power.
struct TheoryTarget {
    bool is_power = false;
    double exponent = 0;
    int log_power = 0;
    std::string label;
};

std::optional<TheoryTarget> theory_target(Family f);

}  // namespace sslab
