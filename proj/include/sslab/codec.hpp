#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sslab/bitstream.hpp"
#include "sslab/increments.hpp"
#include "sslab/permutation.hpp"
#include "sslab/simple_process.hpp"
#include "sslab/sorter.hpp"

namespace sslab {

enum class DescriptorScheme {
    // Every move count of the sort trace, self-delimited, in exact processing
    // order, pass p first down to pass 1. Round-trips every permutation.
    trace,
    // Per-key totals T_i, each stored as a self-delimited length field plus
    // raw binary. Kept for length accounting; reconstruction is experimental.
    per_key_totals,
};

struct Descriptor {
    std::vector<uint8_t> bits;  // packed MSB-first
    size_t bit_len = 0;
    int n = 0;
    IncrementSequence increments;
    DescriptorScheme scheme = DescriptorScheme::trace;
};

// Requires t.pass_orders.
Descriptor encode_trace(const SortTrace& t);

// Starts from the sorted list and inverts passes p..1 by replaying the
// recorded counts in reverse processing order.
Permutation decode_trace(const Descriptor& d);

Descriptor encode_per_key_totals(std::span<const int64_t> totals,
                                 const IncrementSequence& H, int n);

// Best-effort inverse of the per-key-totals scheme: extracts digits from each
// T_i (greatest-first in pass order under the digit bounds), converts them to
// a leftward displacement, and fills the remaining keys in increasing order.
// Not guaranteed to reproduce the original permutation.
Permutation decode_per_key_totals(const Descriptor& d);

// Reads the stored totals back from a per-key-totals descriptor.
std::vector<int64_t> read_per_key_totals(const Descriptor& d);

struct DescriptorLength {
    uint64_t total_bits = 0;
    uint64_t payload_bits = 0;   // sum of ceil(log2(count+1))
    uint64_t overhead_bits = 0;  // D = total - payload
};

DescriptorLength descr_length(const Descriptor& d);

// File form: 8-byte magic, then one bit stream holding self-delimited
// n, p, h_1..h_p, scheme, payload bit length, then the payload bits.
inline constexpr char kDescriptorMagic[9] = "SHLDESC1";

void write_descriptor_file(const Descriptor& d, const std::filesystem::path& path);
Descriptor read_descriptor_file(const std::filesystem::path& path);

std::vector<uint8_t> descriptor_to_bytes(const Descriptor& d);
Descriptor descriptor_from_bytes(std::span<const uint8_t> data);

}  // namespace sslab
