#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sslab/analytics.hpp"

namespace sslab {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

// Grid forms: "8" | "1000,2000,5000" | "1000:32000:x2" (geometric).
// Result must be non-empty and strictly increasing.
std::vector<int> parse_grid(const std::string& spec);

struct RunConfig {
    SequenceChoice sequence;
    std::vector<int> grid;
    uint64_t trials = 0;
    std::optional<uint64_t> seed;
    std::optional<std::string> out_path;
    bool exhaustive = false;
    bool retain_traces = false;
    int threads = 0;
};

// Monte Carlo (or exhaustive) estimation over the grid; appends JSONL records
// to out_path and prints a summary table.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyConfig {
    std::string suite = "claims";  // "claims" or "codec"
    int max_n = 6;
};

// Exhaustive property suites; exit 0 iff all pass, first counterexample
// serialized on failure.
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

struct FitConfig {
    std::string store_path;
    std::vector<std::string> families;  // empty = every family in the store
};

int cmd_fit(const FitConfig& cfg, std::ostream& out, std::ostream& err);

struct CodecConfig {
    int n = 0;
    SequenceChoice sequence;
    bool exhaustive = false;
    uint64_t trials = 0;
    std::optional<uint64_t> seed;
};

int cmd_codec_roundtrip(const CodecConfig& cfg, std::ostream& out, std::ostream& err);

struct LbConfig {
    std::optional<SequenceChoice> sequence;  // nullopt = all generated families
    std::vector<int> grid;
};

int cmd_lb(const LbConfig& cfg, std::ostream& out, std::ostream& err);

// Shared by all subcommands: {"error":{"code":..., "message":...}}.
void print_error(std::ostream& err, const std::string& code, const std::string& message);

}  // namespace sslab
