#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sslab/harness.hpp"

namespace {

// Builds a SequenceChoice from --sequence / --increments, which are mutually
// exclusive.
sslab::SequenceChoice make_choice(const std::string& sequence,
                                  const std::string& increments) {
    if (!sequence.empty() && !increments.empty())
        throw std::invalid_argument("give either --sequence or --increments, not both");
    if (!increments.empty()) {
        std::vector<int32_t> h;
        size_t start = 0;
        while (start <= increments.size()) {
            const size_t comma = increments.find(',', start);
            const std::string part =
                increments.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
            h.push_back(static_cast<int32_t>(std::stol(part)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return sslab::SequenceChoice::of_custom(std::move(h));
    }
    if (sequence.empty())
        throw std::invalid_argument("a sequence is required: --sequence or --increments");
    const auto fam = sslab::parse_family(sequence);
    if (!fam || *fam == sslab::Family::custom)
        throw std::invalid_argument("unknown family '" + sequence +
                                    "' (custom sequences go through --increments)");
    return sslab::SequenceChoice::of(*fam);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shellsort increment-sequence benchmark and verification lab"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Monte Carlo / exhaustive inversion estimation");
    std::string run_sequence, run_increments, run_grid, run_out;
    uint64_t run_trials = 0;
    std::optional<uint64_t> run_seed;
    bool run_exhaustive = false, run_retain = false;
    int run_threads = 0;
    run->add_option("--sequence", run_sequence, "increment family");
    run->add_option("--increments", run_increments, "custom sequence, comma separated");
    run->add_option("--n", run_grid, "grid: N | a,b,c | start:stop:xF")->required();
    run->add_option("--trials", run_trials, "trials per grid point");
    run->add_option("--seed", run_seed, "run seed (required unless --exhaustive)");
    run->add_option("--out", run_out, "JSONL output path (appended)");
    run->add_flag("--exhaustive", run_exhaustive, "enumerate all n! inputs exactly");
    run->add_flag("--retain-traces", run_retain, "write first-trial traces next to --out");
    run->add_option("--threads", run_threads, "worker threads (0 = auto)");

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive property suites");
    std::string verify_suite = "claims";
    int verify_max_n = 6;
    verify->add_option("--suite", verify_suite, "claims | codec");
    verify->add_option("--max-n", verify_max_n, "largest list size to enumerate");

    // fit
    auto* fit = app.add_subcommand("fit", "fit scaling exponents from a JSONL store");
    std::string fit_store;
    std::vector<std::string> fit_families;
    fit->add_option("--store", fit_store, "JSONL store path")->required();
    fit->add_option("--family", fit_families, "family (repeatable; default: all in store)");

    // codec roundtrip
    auto* codec = app.add_subcommand("codec", "descriptor codec utilities");
    codec->require_subcommand(1);
    auto* roundtrip = codec->add_subcommand("roundtrip", "encode/decode round-trip check");
    std::string codec_sequence, codec_increments;
    int codec_n = 0;
    bool codec_exhaustive = false;
    uint64_t codec_trials = 0;
    std::optional<uint64_t> codec_seed;
    roundtrip->add_option("--n", codec_n, "list size")->required();
    roundtrip->add_option("--sequence", codec_sequence, "increment family");
    roundtrip->add_option("--increments", codec_increments, "custom sequence");
    roundtrip->add_flag("--exhaustive", codec_exhaustive, "all n! permutations");
    roundtrip->add_option("--trials", codec_trials, "seeded random permutations");
    roundtrip->add_option("--seed", codec_seed, "seed for sampled mode");

    // lb
    auto* lb = app.add_subcommand("lb", "print the lower-bound table");
    std::string lb_sequence, lb_increments, lb_grid;
    lb->add_option("--sequence", lb_sequence, "family, or 'all'");
    lb->add_option("--increments", lb_increments, "custom sequence");
    lb->add_option("--n", lb_grid, "grid: N | a,b,c | start:stop:xF")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        sslab::print_error(std::cerr, "usage", e.what());
        return sslab::kExitUsage;
    }

    try {
        if (run->parsed()) {
            sslab::RunConfig cfg;
            cfg.sequence = make_choice(run_sequence, run_increments);
            cfg.grid = sslab::parse_grid(run_grid);
            cfg.trials = run_trials;
            cfg.seed = run_seed;
            if (!run_out.empty()) cfg.out_path = run_out;
            cfg.exhaustive = run_exhaustive;
            cfg.retain_traces = run_retain;
            cfg.threads = run_threads;
            return sslab::cmd_run(cfg, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            return sslab::cmd_verify({verify_suite, verify_max_n}, std::cout, std::cerr);
        }
        if (fit->parsed()) {
            return sslab::cmd_fit({fit_store, fit_families}, std::cout, std::cerr);
        }
        if (codec->parsed()) {
            sslab::CodecConfig cfg;
            cfg.n = codec_n;
            cfg.sequence = make_choice(codec_sequence, codec_increments);
            cfg.exhaustive = codec_exhaustive;
            cfg.trials = codec_trials;
            cfg.seed = codec_seed;
            return sslab::cmd_codec_roundtrip(cfg, std::cout, std::cerr);
        }
        if (lb->parsed()) {
            sslab::LbConfig cfg;
            const bool all = lb_sequence == "all" ||
                             (lb_sequence.empty() && lb_increments.empty());
            if (!all) cfg.sequence = make_choice(lb_sequence, lb_increments);
            cfg.grid = sslab::parse_grid(lb_grid);
            return sslab::cmd_lb(cfg, std::cout, std::cerr);
        }
    } catch (const std::invalid_argument& e) {
        sslab::print_error(std::cerr, "usage", e.what());
        return sslab::kExitUsage;
    } catch (const std::exception& e) {
        sslab::print_error(std::cerr, "internal", e.what());
        return sslab::kExitPropertyFailure;
    }
    return sslab::kExitUsage;
}
