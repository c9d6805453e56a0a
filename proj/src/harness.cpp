#include "sslab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "sslab/codec.hpp"
#include "sslab/rng.hpp"
#include "sslab/store.hpp"

namespace sslab {

namespace {

int64_t parse_int(std::string_view s, const std::string& what) {
    int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(what + ": cannot parse integer from '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

// The standard exhaustive-suite sequences, restricted to those valid for n.
std::vector<IncrementSequence> suite_sequences(int n) {
    static const std::vector<std::vector<int32_t>> raw = {{2, 1}, {3, 1}, {4, 2, 1}};
    std::vector<IncrementSequence> out;
    for (const auto& h : raw)
        if (h.front() < n) out.push_back(IncrementSequence::validate(h, n));
    return out;
}

std::string increments_string(const std::vector<int32_t>& h) {
    std::string s;
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h[i]);
    }
    return s;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const guard_error& e) {
        print_error(err, "guard", e.what());
        return kExitUsage;
    } catch (const sequence_error& e) {
        print_error(err, "invalid_sequence", e.what());
        return kExitUsage;
    } catch (const infeasible_error& e) {
        print_error(err, "infeasible", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        print_error(err, "usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        print_error(err, "internal", e.what());
        return kExitPropertyFailure;
    }
}

}  // namespace

void print_error(std::ostream& err, const std::string& code, const std::string& message) {
    nlohmann::json j{{"error", {{"code", code}, {"message", message}}}};
    err << j.dump() << '\n';
}

std::vector<int> parse_grid(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("grid: empty specification");
    std::vector<int> grid;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3 || parts[2].empty() || parts[2][0] != 'x')
            throw std::invalid_argument("grid: geometric form is start:stop:xFACTOR");
        const int64_t start = parse_int(parts[0], "grid start");
        const int64_t stop = parse_int(parts[1], "grid stop");
        const int64_t factor = parse_int(parts[2].substr(1), "grid factor");
        if (start < 1 || stop < start || factor < 2)
            throw std::invalid_argument("grid: need 1 <= start <= stop and factor >= 2");
        for (int64_t v = start; v <= stop; v *= factor)
            grid.push_back(static_cast<int>(v));
    } else {
        for (const auto part : split(spec, ','))
            grid.push_back(static_cast<int>(parse_int(part, "grid value")));
    }
    if (grid.empty()) throw std::invalid_argument("grid: no values");
    for (int v : grid)
        if (v < 1) throw std::invalid_argument("grid: values must be >= 1");
    for (size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw std::invalid_argument("grid: values must be strictly increasing");
    return grid;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (cfg.grid.empty()) throw std::invalid_argument("run: --n grid is required");
        if (!cfg.exhaustive) {
            if (cfg.trials < 1)
                throw std::invalid_argument("run: --trials must be >= 1");
            if (!cfg.seed)
                throw std::invalid_argument(
                    "run: --seed is required (there is no default, to keep runs reproducible)");
        }
        if (cfg.retain_traces) {
            if (cfg.exhaustive)
                throw std::invalid_argument("run: --retain-traces needs sampled mode");
            if (!cfg.out_path)
                throw std::invalid_argument("run: --retain-traces needs --out");
            for (int n : cfg.grid)
                if (n > 100)
                    throw std::invalid_argument("run: trace retention is limited to n <= 100");
        }

        McOptions opts;
        opts.trials = cfg.trials;
        opts.seed = Seed{cfg.seed.value_or(0)};
        opts.exhaustive = cfg.exhaustive;
        opts.threads = cfg.threads;

        std::vector<ExperimentRecord> records;
        records.reserve(cfg.grid.size());
        for (int n : cfg.grid) records.push_back(mc_estimate(cfg.sequence, n, opts));

        if (cfg.out_path) append_records(*cfg.out_path, records);

        if (cfg.retain_traces) {
            std::vector<nlohmann::json> lines;
            for (int n : cfg.grid) {
                const IncrementSequence H = cfg.sequence.resolve(n);
                const uint64_t trial_seed =
                    derive_seed(opts.seed.value, static_cast<uint64_t>(n), 0);
                const Permutation p = random_permutation(n, Seed{trial_seed});
                const SortTrace t = shellsort(p, H, TraceOptions{true, true});
                lines.push_back(nlohmann::json{{"family", cfg.sequence.label()},
                                               {"n", n},
                                               {"seed", trial_seed},
                                               {"trace", trace_to_json(t)}});
            }
            std::ofstream traces(*cfg.out_path + ".traces", std::ios::app);
            if (!traces)
                throw std::runtime_error("cannot open " + *cfg.out_path + ".traces");
            for (const auto& l : lines) traces << l.dump() << '\n';
        }

        out << "family=" << cfg.sequence.label();
        if (!cfg.exhaustive) out << " trials=" << cfg.trials << " seed=" << *cfg.seed;
        out << (cfg.exhaustive ? " mode=exhaustive" : "") << "\n";
        out << std::setw(10) << "n" << std::setw(18) << "mean_T" << std::setw(18)
            << "lb_value" << std::setw(12) << "ratio" << "\n";
        for (const auto& r : records) {
            out << std::setw(10) << r.n << std::setw(18) << std::fixed
                << std::setprecision(2) << r.mean_T << std::setw(18) << r.lb_value
                << std::setw(12) << std::setprecision(4) << (r.mean_T / r.lb_value)
                << "\n";
            out.unsetf(std::ios::fixed);
        }
        return kExitSuccess;
    });
}

namespace {

int verify_claims(int max_n, std::ostream& out) {
    if (max_n < 3 || max_n > kOracleMaxN)
        throw guard_error("verify claims: --max-n must be within 3.." +
                          std::to_string(kOracleMaxN));
    nlohmann::json results = nlohmann::json::array();
    for (int n = 3; n <= max_n; ++n) {
        for (const IncrementSequence& H : suite_sequences(n)) {
            uint64_t checked = 0;
            uint64_t dominance_violations = 0;
            uint64_t bound_violations = 0;
            uint64_t apply_failures = 0;
            uint64_t total_agree = 0;
            uint64_t matrix_agree = 0;
            double max_ratio = 0.0;
            nlohmann::json counterexample;

            PermutationEnumerator en(n);
            while (auto p = en.next()) {
                const SortTrace t = shellsort(*p, H, TraceOptions{false, true});
                const MinorSchedule oracle = minor_oracle(*p, H);
                const MinorSchedule cand = minor_candidate(*p, H);
                ++checked;

                if (oracle.total() > total_inversions(t)) {
                    ++dominance_violations;
                    counterexample = {{"claim", "T' <= T"},
                                      {"n", n},
                                      {"increments", H.h()},
                                      {"permutation", p->keys()},
                                      {"oracle_total", oracle.total()},
                                      {"trace_total", total_inversions(t)}};
                    break;
                }
                bool bound_ok = true;
                for (int k = 1; k <= H.passes() && bound_ok; ++k) {
                    const int64_t prev = H.with_h0(k - 1);
                    const int64_t hk = H.at(k);
                    for (int i = 1; i <= n; ++i) {
                        const int64_t d = oracle.at(i, k);
                        max_ratio = std::max(
                            max_ratio, static_cast<double>(d * hk) / static_cast<double>(prev));
                        if (d * hk >= prev) {
                            bound_ok = false;
                            ++bound_violations;
                            counterexample = {{"claim", "n_{i,k} < h_{k-1}/h_k"},
                                              {"n", n},
                                              {"increments", H.h()},
                                              {"permutation", p->keys()},
                                              {"key", i},
                                              {"pass", k},
                                              {"digit", d}};
                            break;
                        }
                    }
                }
                if (!bound_ok) break;

                if (!simple_apply(*p, H, oracle).is_identity()) {
                    ++apply_failures;
                    counterexample = {{"claim", "oracle schedule sorts"},
                                      {"n", n},
                                      {"increments", H.h()},
                                      {"permutation", p->keys()}};
                    break;
                }
                if (cand.total() == oracle.total()) ++total_agree;
                if (cand.digits == oracle.digits) ++matrix_agree;
            }

            bool radix_ok = true;
            std::set<std::vector<int32_t>> images;
            for (int d = 0; d <= n - 1; ++d) {
                const RadixDigits rd = mixed_radix_encode(d, H, n);
                if (mixed_radix_decode(rd) != d || !images.insert(rd.digits).second) {
                    radix_ok = false;
                    counterexample = {{"claim", "mixed radix round-trip/uniqueness"},
                                      {"n", n},
                                      {"increments", H.h()},
                                      {"value", d}};
                    break;
                }
            }

            const bool failed = dominance_violations || bound_violations ||
                                apply_failures || !radix_ok;
            if (failed) {
                nlohmann::json failure{{"error",
                                        {{"code", "property_failure"},
                                         {"message", "claims suite found a counterexample"}}},
                                       {"counterexample", counterexample}};
                out << failure.dump(2) << '\n';
                return kExitPropertyFailure;
            }

            results.push_back(
                {{"n", n},
                 {"increments", H.h()},
                 {"permutations_checked", checked},
                 {"dominance_violations", dominance_violations},
                 {"digit_bound_violations", bound_violations},
                 {"max_digit_bound_ratio", max_ratio},
                 {"candidate_total_agreement_rate",
                  static_cast<double>(total_agree) / static_cast<double>(checked)},
                 {"candidate_matrix_agreement_rate",
                  static_cast<double>(matrix_agree) / static_cast<double>(checked)},
                 {"radix_roundtrip_ok", radix_ok}});
        }
    }
    nlohmann::json report{{"suite", "claims"}, {"max_n", max_n}, {"pass", true},
                          {"results", results}};
    out << report.dump(2) << '\n';
    return kExitSuccess;
}

int verify_codec(int max_n, std::ostream& out) {
    if (max_n < 3 || max_n > kMaxEnumN)
        throw guard_error("verify codec: --max-n must be within 3.." +
                          std::to_string(kMaxEnumN));
    nlohmann::json results = nlohmann::json::array();
    for (int n = 3; n <= max_n; ++n) {
        for (const IncrementSequence& H : suite_sequences(n)) {
            uint64_t checked = 0;
            uint64_t failures = 0;
            bool injective = true;
            std::set<std::vector<uint8_t>> seen;
            nlohmann::json counterexample;

            PermutationEnumerator en(n);
            while (auto p = en.next()) {
                const SortTrace t = shellsort(*p, H, TraceOptions{false, true});
                const Descriptor d = encode_trace(t);
                ++checked;
                if (decode_trace(d) != *p) {
                    ++failures;
                    counterexample = {{"claim", "trace descriptor round-trip"},
                                      {"n", n},
                                      {"increments", H.h()},
                                      {"permutation", p->keys()}};
                    break;
                }
                if (n <= 6 && !seen.insert(d.bits).second) {
                    injective = false;
                    counterexample = {{"claim", "descriptor injectivity"},
                                      {"n", n},
                                      {"increments", H.h()},
                                      {"permutation", p->keys()}};
                    break;
                }
            }
            if (failures || !injective) {
                nlohmann::json failure{{"error",
                                        {{"code", "property_failure"},
                                         {"message", "codec suite found a counterexample"}}},
                                       {"counterexample", counterexample}};
                out << failure.dump(2) << '\n';
                return kExitPropertyFailure;
            }
            results.push_back({{"n", n},
                               {"increments", H.h()},
                               {"permutations_checked", checked},
                               {"roundtrip_failures", failures},
                               {"injectivity_checked", n <= 6}});
        }
    }
    nlohmann::json report{{"suite", "codec"}, {"max_n", max_n}, {"pass", true},
                          {"results", results}};
    out << report.dump(2) << '\n';
    return kExitSuccess;
}

}  // namespace

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (cfg.suite == "claims") return verify_claims(cfg.max_n, out);
        if (cfg.suite == "codec") return verify_codec(cfg.max_n, out);
        throw std::invalid_argument("verify: unknown suite '" + cfg.suite +
                                    "' (expected claims or codec)");
    });
}

int cmd_fit(const FitConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto records = read_records(cfg.store_path);
        if (records.empty())
            throw std::invalid_argument("fit: store '" + cfg.store_path + "' has no records");

        // Latest record wins per (family, n).
        std::map<std::string, std::map<int, ExperimentRecord>> by_family;
        for (const auto& r : records) by_family[r.family][r.n] = r;

        std::vector<std::string> families = cfg.families;
        if (families.empty())
            for (const auto& [fam, _] : by_family) families.push_back(fam);

        std::ostringstream ratios;
        out << "family,exponent,target,residual,grid\n";
        for (const auto& fam : families) {
            const auto it = by_family.find(fam);
            if (it == by_family.end() || it->second.size() < 4)
                throw std::invalid_argument("fit: insufficient data for family '" + fam +
                                            "' (need >= 4 grid points)");
            std::vector<std::pair<double, double>> points;
            std::string grid;
            for (const auto& [n, rec] : it->second) {
                points.emplace_back(static_cast<double>(n), rec.mean_T);
                if (!grid.empty()) grid += ";";
                grid += std::to_string(n);
            }
            const FitResult fit = fit_exponent(points);
            const auto fam_enum = parse_family(fam);
            const auto target = fam_enum ? theory_target(*fam_enum) : std::nullopt;
            out << fam << "," << std::setprecision(6) << std::fixed << fit.exponent
                << "," << (target ? target->label : std::string("-")) << ","
                << std::setprecision(6) << fit.residual << "," << grid << "\n";
            out.unsetf(std::ios::fixed);

            if (target && !target->is_power) {
                for (const auto& [n, rec] : it->second) {
                    const double denom =
                        n * std::pow(std::log2(static_cast<double>(n)), target->log_power);
                    ratios << fam << "," << n << "," << rec.mean_T << ","
                           << rec.mean_T / denom << "\n";
                }
            }
        }
        const std::string ratio_rows = ratios.str();
        if (!ratio_rows.empty()) {
            out << "\nfamily,n,mean_T,ratio\n" << ratio_rows;
        }
        return kExitSuccess;
    });
}

int cmd_codec_roundtrip(const CodecConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (cfg.n < 3) throw std::invalid_argument("codec roundtrip: --n must be >= 3");
        const IncrementSequence H = cfg.sequence.resolve(cfg.n);
        uint64_t checked = 0;
        uint64_t failures = 0;
        nlohmann::json counterexample;

        auto check_one = [&](const Permutation& p) {
            const SortTrace t = shellsort(p, H, TraceOptions{false, true});
            const Descriptor d = encode_trace(t);
            ++checked;
            if (decode_trace(d) != p) {
                ++failures;
                counterexample = {{"n", cfg.n},
                                  {"increments", H.h()},
                                  {"permutation", p.keys()}};
                return false;
            }
            return true;
        };

        if (cfg.exhaustive) {
            PermutationEnumerator en(cfg.n);
            while (auto p = en.next())
                if (!check_one(*p)) break;
        } else {
            if (cfg.trials < 1)
                throw std::invalid_argument("codec roundtrip: --trials must be >= 1");
            if (!cfg.seed)
                throw std::invalid_argument("codec roundtrip: --seed is required");
            for (uint64_t t = 0; t < cfg.trials; ++t) {
                const uint64_t s = derive_seed(*cfg.seed, static_cast<uint64_t>(cfg.n), t);
                if (!check_one(random_permutation(cfg.n, Seed{s}))) break;
            }
        }

        nlohmann::json report{{"mode", cfg.exhaustive ? "exhaustive" : "sampled"},
                              {"n", cfg.n},
                              {"increments", H.h()},
                              {"checked", checked},
                              {"failures", failures}};
        if (failures) report["counterexample"] = counterexample;
        out << report.dump(2) << '\n';
        return failures ? kExitPropertyFailure : kExitSuccess;
    });
}

int cmd_lb(const LbConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (cfg.grid.empty()) throw std::invalid_argument("lb: --n grid is required");
        std::vector<SequenceChoice> choices;
        if (cfg.sequence) {
            choices.push_back(*cfg.sequence);
        } else {
            for (Family f : generated_families()) choices.push_back(SequenceChoice::of(f));
        }
        out << std::setw(20) << "family" << std::setw(10) << "n" << std::setw(16)
            << "lb_value" << "  increments\n";
        for (const auto& choice : choices) {
            for (int n : cfg.grid) {
                out << std::setw(20) << choice.label() << std::setw(10) << n;
                try {
                    const IncrementSequence H = choice.resolve(n);
                    out << std::setw(16) << std::fixed << std::setprecision(1)
                        << lower_bound(n, H) << "  (" << increments_string(H.h()) << ")\n";
                    out.unsetf(std::ios::fixed);
                } catch (const infeasible_error&) {
                    out << std::setw(16) << "infeasible" << "\n";
                } catch (const sequence_error&) {
                    out << std::setw(16) << "invalid" << "\n";
                }
            }
        }
        return kExitSuccess;
    });
}

}  // namespace sslab
