#include "sslab/analytics.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "sslab/parallel.hpp"
#include "sslab/rng.hpp"

namespace sslab {

namespace {

using boost::multiprecision::cpp_rational;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

double lower_bound(int n, const IncrementSequence& H) {
    if (H.n() != n)
        throw std::invalid_argument("lower_bound: sequence built for different n");
    cpp_rational sum = 0;
    for (int k = 1; k <= H.passes(); ++k)
        sum += cpp_rational(H.with_h0(k - 1), H.at(k));
    sum *= n;
    return sum.convert_to<double>();
}

IncrementSequence SequenceChoice::resolve(int n) const {
    if (family == Family::custom) {
        if (!custom) throw std::invalid_argument("custom sequence not provided");
        return IncrementSequence::validate(*custom, n);
    }
    return generate(family, n);
}

std::string SequenceChoice::label() const {
    return to_string(family);
}

void to_json(nlohmann::json& j, const ExperimentRecord& r) {
    j = nlohmann::json{{"family", r.family},
                       {"n", r.n},
                       {"increments", r.increments},
                       {"trials", r.trials},
                       {"seed", r.seed},
                       {"exhaustive", r.exhaustive},
                       {"mean_T", r.mean_T},
                       {"var_T", r.var_T},
                       {"per_pass_means", r.per_pass_means},
                       {"lb_value", r.lb_value},
                       {"timestamp", r.timestamp}};
}

void from_json(const nlohmann::json& j, ExperimentRecord& r) {
    j.at("family").get_to(r.family);
    j.at("n").get_to(r.n);
    j.at("increments").get_to(r.increments);
    j.at("trials").get_to(r.trials);
    j.at("seed").get_to(r.seed);
    r.exhaustive = j.value("exhaustive", false);
    j.at("mean_T").get_to(r.mean_T);
    j.at("var_T").get_to(r.var_T);
    j.at("per_pass_means").get_to(r.per_pass_means);
    j.at("lb_value").get_to(r.lb_value);
    r.timestamp = j.value("timestamp", "");
}

ExperimentRecord mc_estimate(const SequenceChoice& choice, int n, const McOptions& opts) {
    const IncrementSequence H = choice.resolve(n);
    const int passes = H.passes();

    ExperimentRecord rec;
    rec.family = choice.label();
    rec.n = n;
    rec.increments = H.h();
    rec.seed = opts.seed.value;
    rec.exhaustive = opts.exhaustive;
    rec.lb_value = lower_bound(n, H);
    rec.timestamp = utc_timestamp();

    // Exact integer accumulation: totals are integers, so sums of T and T^2
    // carry no rounding regardless of trial order.
    unsigned __int128 sum_t = 0;
    unsigned __int128 sum_t2 = 0;
    std::vector<uint64_t> pass_sums(static_cast<size_t>(passes), 0);
    uint64_t count = 0;

    if (opts.exhaustive) {
        for_each_permutation(n, [&](const std::vector<int32_t>& keys) {
            const SortStats s = shellsort_stats(Permutation::unchecked(keys), H,
                                                opts.check_pass_sums);
            if (!s.sorted) throw std::logic_error("mc_estimate: unsorted result");
            sum_t += s.total;
            sum_t2 += static_cast<unsigned __int128>(s.total) * s.total;
            for (int k = 0; k < passes; ++k)
                pass_sums[static_cast<size_t>(k)] += s.per_pass[static_cast<size_t>(k)];
            ++count;
        });
        rec.trials = count;
        // Population mean and variance over the full input space.
        const long double m = static_cast<long double>(sum_t) / static_cast<long double>(count);
        rec.mean_T = static_cast<double>(m);
        rec.var_T = static_cast<double>(
            static_cast<long double>(sum_t2) / static_cast<long double>(count) - m * m);
    } else {
        if (opts.trials < 1) throw std::invalid_argument("mc_estimate: trials must be >= 1");
        const uint64_t trials = opts.trials;
        std::vector<uint64_t> totals(trials, 0);
        std::vector<uint64_t> per_pass(trials * static_cast<size_t>(passes), 0);
        parallel_for(trials, opts.threads, [&](uint64_t t) {
            const uint64_t trial_seed =
                derive_seed(opts.seed.value, static_cast<uint64_t>(n), t);
            const Permutation p = random_permutation(n, Seed{trial_seed});
            const SortStats s = shellsort_stats(p, H, opts.check_pass_sums);
            if (!s.sorted) throw std::logic_error("mc_estimate: unsorted result");
            totals[t] = s.total;
            for (int k = 0; k < passes; ++k)
                per_pass[t * static_cast<size_t>(passes) + static_cast<size_t>(k)] =
                    s.per_pass[static_cast<size_t>(k)];
        });
        // Fixed-order reduction over trial indices.
        for (uint64_t t = 0; t < trials; ++t) {
            sum_t += totals[t];
            sum_t2 += static_cast<unsigned __int128>(totals[t]) * totals[t];
            for (int k = 0; k < passes; ++k)
                pass_sums[static_cast<size_t>(k)] +=
                    per_pass[t * static_cast<size_t>(passes) + static_cast<size_t>(k)];
        }
        count = trials;
        rec.trials = trials;
        const long double m = static_cast<long double>(sum_t) / static_cast<long double>(count);
        rec.mean_T = static_cast<double>(m);
        if (trials >= 2) {
            // Unbiased sample variance.
            const long double num =
                static_cast<long double>(sum_t2) -
                static_cast<long double>(sum_t) * static_cast<long double>(sum_t) /
                    static_cast<long double>(count);
            rec.var_T = static_cast<double>(num / static_cast<long double>(count - 1));
        } else {
            rec.var_T = 0.0;
        }
    }

    rec.per_pass_means.resize(static_cast<size_t>(passes));
    for (int k = 0; k < passes; ++k)
        rec.per_pass_means[static_cast<size_t>(k)] = static_cast<double>(
            static_cast<long double>(pass_sums[static_cast<size_t>(k)]) /
            static_cast<long double>(count));
    return rec;
}

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
    if (points.size() < 4)
        throw std::invalid_argument("fit_exponent: need at least 4 points");
    double n_min = points[0].first, n_max = points[0].first;
    for (const auto& [n, t] : points) {
        if (n <= 0 || t <= 0)
            throw std::invalid_argument("fit_exponent: points must be positive");
        n_min = std::min(n_min, n);
        n_max = std::max(n_max, n);
    }
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("fit_exponent: n values must be distinct");
    if (n_max / n_min < 10.0)
        throw std::invalid_argument("fit_exponent: n values must span at least one decade");

    const double m = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, t] : points) {
        const double x = std::log2(n), y = std::log2(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    const double alpha = (m * sxy - sx * sy) / denom;
    const double beta = (sy - alpha * sx) / m;

    FitResult fit;
    fit.exponent = alpha;
    fit.log_coefficient = beta;
    fit.points.assign(points.begin(), points.end());
    for (const auto& [n, t] : points) {
        const double r = std::log2(t) - (alpha * std::log2(n) + beta);
        fit.residual += r * r;
    }
    return fit;
}

std::vector<PassAkStats> ak_stats(const std::vector<int32_t>& digits_row_major,
                                  const IncrementSequence& H, int n) {
    const int passes = H.passes();
    if (digits_row_major.size() != static_cast<size_t>(n) * static_cast<size_t>(passes))
        throw std::invalid_argument("ak_stats: digit matrix dimensions do not match");
    std::vector<PassAkStats> out(static_cast<size_t>(passes));
    for (int k = 1; k <= passes; ++k) {
        PassAkStats& st = out[static_cast<size_t>(k) - 1];
        double sum = 0, log_sum = 0;
        for (int i = 1; i <= n; ++i) {
            const int32_t c = digits_row_major[static_cast<size_t>(i - 1) *
                                                   static_cast<size_t>(passes) +
                                               static_cast<size_t>(k - 1)];
            sum += c;
            if (c <= 1) {
                if (c <= 0) ++st.zero_counts;
                continue;  // log2(max(c,1)) == 0
            }
            log_sum += std::log2(static_cast<double>(c));
        }
        const double ratio = static_cast<double>(H.with_h0(k - 1)) / H.at(k);
        st.a_k = std::log2(ratio) - log_sum / n;
        st.arith_mean = sum / n;
        st.geo_mean = std::exp2(log_sum / n);
    }
    return out;
}

std::vector<PassAkStats> ak_stats(const MinorSchedule& s) {
    return ak_stats(s.digits, s.increments, s.n);
}

std::vector<PassAkStats> ak_stats(const SortTrace& t) {
    return ak_stats(t.moves, t.increments, t.n);
}

std::optional<TheoryTarget> theory_target(Family f) {
    switch (f) {
        case Family::knuth2:
            return TheoryTarget{true, 5.0 / 3.0, 0, "n^(5/3)"};
        case Family::jk3:
            return TheoryTarget{true, 23.0 / 15.0, 0, "n^(23/15)"};
        case Family::jk3_conjecture:
            return TheoryTarget{true, 3.0 / 2.0, 0, "n^(3/2)"};
        case Family::shell:
        case Family::papernov_stasevich:
        case Family::hibbard:
        case Family::pratt_log3:
            return TheoryTarget{false, 0, 1, "n*log2(n) lower-bound form"};
        case Family::pratt_2i3j:
            return TheoryTarget{false, 0, 2, "n*log2(n)^2"};
        case Family::custom:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace sslab
