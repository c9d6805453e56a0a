#include "sslab/codec.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace sslab {

namespace {

// Payload accounting: ceil(log2(count+1)) bits of information per count.
uint64_t payload_bits_for(uint64_t v) {
    return v == 0 ? 0 : static_cast<uint64_t>(binary_length(v));
}

std::vector<size_t> chain_lengths(int n, int h) {
    std::vector<size_t> lens(static_cast<size_t>(h));
    for (int c = 0; c < h; ++c)
        lens[static_cast<size_t>(c)] = static_cast<size_t>((n - 1 - c) / h + 1);
    return lens;
}

}  // namespace

Descriptor encode_trace(const SortTrace& t) {
    if (t.pass_orders.empty())
        throw std::invalid_argument("encode_trace: trace has no pass orders");
    BitWriter w;
    for (int k = t.increments.passes(); k >= 1; --k)
        for (const auto& [key, moved] : t.pass_orders[static_cast<size_t>(k) - 1])
            encode_selfdelim(static_cast<uint64_t>(moved), w);
    const size_t bit_len = w.bit_size();
    return Descriptor{w.take_bytes(), bit_len, t.n, t.increments, DescriptorScheme::trace};
}

Permutation decode_trace(const Descriptor& d) {
    if (d.scheme != DescriptorScheme::trace)
        throw codec_error("decode_trace: descriptor does not use the trace scheme");
    const int n = d.n;
    BitReader r(d.bits, d.bit_len);
    std::vector<int32_t> a(static_cast<size_t>(n));
    std::iota(a.begin(), a.end(), 1);

    std::vector<std::vector<int32_t>> counts;
    std::vector<int32_t> chain;
    for (int k = d.increments.passes(); k >= 1; --k) {
        const int h = d.increments.at(k);
        const auto lens = chain_lengths(n, h);
        counts.assign(static_cast<size_t>(h), {});
        for (size_t c = 0; c < static_cast<size_t>(h); ++c) {
            counts[c].resize(lens[c]);
            for (size_t j = 0; j < lens[c]; ++j) {
                const uint64_t v = decode_selfdelim(r);
                if (v > j)
                    throw codec_error("decode_trace: count " + std::to_string(v) +
                                      " exceeds chain position " + std::to_string(j + 1));
                counts[c][j] = static_cast<int32_t>(v);
            }
        }
        // Undo the pass: reverse processing order, each key returns from
        // position j-m to position j, shifting the displaced block left.
        for (size_t c = static_cast<size_t>(h); c-- > 0;) {
            chain.clear();
            for (size_t pos = c; pos < static_cast<size_t>(n); pos += static_cast<size_t>(h))
                chain.push_back(a[pos]);
            for (size_t j = chain.size(); j-- > 0;) {
                const size_t m = static_cast<size_t>(counts[c][j]);
                if (m != 0) {
                    const int32_t key = chain[j - m];
                    std::memmove(&chain[j - m], &chain[j - m + 1], m * sizeof(int32_t));
                    chain[j] = key;
                }
            }
            size_t i = 0;
            for (size_t pos = c; pos < static_cast<size_t>(n); pos += static_cast<size_t>(h))
                a[pos] = chain[i++];
        }
    }
    if (r.remaining() != 0) throw codec_error("decode_trace: trailing bits");
    return Permutation::unchecked(std::move(a));
}

Descriptor encode_per_key_totals(std::span<const int64_t> totals,
                                 const IncrementSequence& H, int n) {
    if (static_cast<int>(totals.size()) != n)
        throw std::invalid_argument("encode_per_key_totals: need one total per key");
    BitWriter w;
    for (int64_t t : totals) {
        if (t < 0) throw std::invalid_argument("encode_per_key_totals: negative total");
        const int len = binary_length(static_cast<uint64_t>(t));
        encode_selfdelim(static_cast<uint64_t>(len), w);
        w.push_bits(static_cast<uint64_t>(t), len);
    }
    const size_t bit_len = w.bit_size();
    return Descriptor{w.take_bytes(), bit_len, n, H, DescriptorScheme::per_key_totals};
}

std::vector<int64_t> read_per_key_totals(const Descriptor& d) {
    if (d.scheme != DescriptorScheme::per_key_totals)
        throw codec_error("read_per_key_totals: wrong scheme");
    BitReader r(d.bits, d.bit_len);
    std::vector<int64_t> totals;
    totals.reserve(static_cast<size_t>(d.n));
    for (int i = 0; i < d.n; ++i) {
        const uint64_t len = decode_selfdelim(r);
        if (len == 0 || len > 63) throw codec_error("read_per_key_totals: bad length field");
        totals.push_back(static_cast<int64_t>(r.read_bits(static_cast<int>(len))));
    }
    if (r.remaining() != 0) throw codec_error("read_per_key_totals: trailing bits");
    return totals;
}

Permutation decode_per_key_totals(const Descriptor& d) {
    const std::vector<int64_t> totals = read_per_key_totals(d);
    const int n = d.n;
    const int p = d.increments.passes();
    std::vector<int32_t> keys(static_cast<size_t>(n), 0);
    std::vector<bool> key_placed(static_cast<size_t>(n), false);
    for (int32_t i = 1; i <= n; ++i) {
        int64_t rem = totals[static_cast<size_t>(i) - 1];
        int64_t displacement = 0;
        for (int k = 1; k <= p; ++k) {
            const int64_t dk = std::min<int64_t>(max_digit(d.increments, n, k), rem);
            displacement += dk * d.increments.at(k);
            rem -= dk;
        }
        if (rem != 0)
            throw codec_error("decode_per_key_totals: total for key " + std::to_string(i) +
                              " is not representable");
        if (displacement == 0) continue;
        const int64_t pos = i + displacement;
        if (pos > n || keys[static_cast<size_t>(pos) - 1] != 0)
            throw codec_error("decode_per_key_totals: displacement collision at key " +
                              std::to_string(i));
        keys[static_cast<size_t>(pos) - 1] = i;
        key_placed[static_cast<size_t>(i) - 1] = true;
    }
    // Remaining keys fill the free slots in increasing order.
    int32_t next = 1;
    for (auto& slot : keys) {
        if (slot != 0) continue;
        while (key_placed[static_cast<size_t>(next) - 1]) ++next;
        slot = next;
        key_placed[static_cast<size_t>(next) - 1] = true;
    }
    return Permutation::from_keys(std::move(keys));
}

DescriptorLength descr_length(const Descriptor& d) {
    DescriptorLength out;
    out.total_bits = d.bit_len;
    BitReader r(d.bits, d.bit_len);
    if (d.scheme == DescriptorScheme::trace) {
        const size_t entries =
            static_cast<size_t>(d.n) * static_cast<size_t>(d.increments.passes());
        for (size_t i = 0; i < entries; ++i)
            out.payload_bits += payload_bits_for(decode_selfdelim(r));
    } else {
        for (int i = 0; i < d.n; ++i) {
            const uint64_t len = decode_selfdelim(r);
            const uint64_t v = r.read_bits(static_cast<int>(len));
            out.payload_bits += payload_bits_for(v);
        }
    }
    out.overhead_bits = out.total_bits - out.payload_bits;
    return out;
}

std::vector<uint8_t> descriptor_to_bytes(const Descriptor& d) {
    std::vector<uint8_t> out(kDescriptorMagic, kDescriptorMagic + 8);
    BitWriter w;
    encode_selfdelim(static_cast<uint64_t>(d.n), w);
    encode_selfdelim(static_cast<uint64_t>(d.increments.passes()), w);
    for (int32_t h : d.increments.h()) encode_selfdelim(static_cast<uint64_t>(h), w);
    encode_selfdelim(d.scheme == DescriptorScheme::trace ? 0 : 1, w);
    encode_selfdelim(d.bit_len, w);
    BitReader r(d.bits, d.bit_len);
    for (size_t i = 0; i < d.bit_len; ++i) w.push_bit(r.read_bit());
    out.insert(out.end(), w.bytes().begin(), w.bytes().end());
    return out;
}

Descriptor descriptor_from_bytes(std::span<const uint8_t> data) {
    if (data.size() < 8 || std::memcmp(data.data(), kDescriptorMagic, 8) != 0)
        throw codec_error("descriptor file: bad magic");
    BitReader r(data.data() + 8, (data.size() - 8) * 8);
    const auto n = static_cast<int>(decode_selfdelim(r));
    const auto p = static_cast<int>(decode_selfdelim(r));
    if (n < 1 || p < 1 || p > n) throw codec_error("descriptor file: bad dimensions");
    std::vector<int32_t> h(static_cast<size_t>(p));
    for (auto& v : h) v = static_cast<int32_t>(decode_selfdelim(r));
    const uint64_t scheme_id = decode_selfdelim(r);
    if (scheme_id > 1) throw codec_error("descriptor file: unknown scheme");
    const uint64_t bit_len = decode_selfdelim(r);
    if (bit_len > r.remaining()) throw codec_error("descriptor file: truncated payload");
    BitWriter w;
    for (uint64_t i = 0; i < bit_len; ++i) w.push_bit(r.read_bit());
    IncrementSequence seq = [&] {
        try {
            return IncrementSequence::validate(std::move(h), n);
        } catch (const sequence_error& e) {
            throw codec_error(std::string("descriptor file: invalid increments: ") + e.what());
        }
    }();
    const size_t len = w.bit_size();
    return Descriptor{w.take_bytes(), len, n, std::move(seq),
                      scheme_id == 0 ? DescriptorScheme::trace
                                     : DescriptorScheme::per_key_totals};
}

void write_descriptor_file(const Descriptor& d, const std::filesystem::path& path) {
    const auto bytes = descriptor_to_bytes(d);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

Descriptor read_descriptor_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return descriptor_from_bytes(bytes);
}

}  // namespace sslab
