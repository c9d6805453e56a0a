#include <filesystem>
#include <set>

#include "doctest.h"
#include "sslab/codec.hpp"
#include "sslab/rng.hpp"

using namespace sslab;

namespace {

IncrementSequence seq(std::vector<int32_t> h, int n) {
    return IncrementSequence::validate(std::move(h), n);
}

std::string selfdelim_string(uint64_t v) {
    BitWriter w;
    encode_selfdelim(v, w);
    return w.to_string();
}

}  // namespace

TEST_CASE("self-delimiting code: bit doubling with complemented last bit") {
    CHECK(selfdelim_string(0) == "01");
    CHECK(selfdelim_string(1) == "10");
    CHECK(selfdelim_string(5) == "110010");
    CHECK(selfdelim_string(2) == "1001");
    CHECK(selfdelim_string(6) == "111001");

    for (uint64_t v : {0ull, 1ull, 2ull, 3ull, 7ull, 8ull, 100ull, 12345678ull}) {
        BitWriter w;
        encode_selfdelim(v, w);
        CHECK(w.bit_size() == 2u * static_cast<unsigned>(binary_length(v)));
        BitReader r(w.bytes(), w.bit_size());
        CHECK(decode_selfdelim(r) == v);
        CHECK(r.remaining() == 0);
    }
}

TEST_CASE("self-delimiting code has the prefix property") {
    // A codeword followed by junk decodes to the codeword alone.
    BitWriter w;
    encode_selfdelim(1, w);
    w.push_bits(0b1011, 4);
    BitReader r(w.bytes(), w.bit_size());
    CHECK(decode_selfdelim(r) == 1);
    CHECK(r.cursor() == 2);

    // Fuzz: concatenations of codewords parse back unambiguously.
    SplitMix64 gen(42);
    for (int round = 0; round < 200; ++round) {
        const size_t count = 1 + gen.below(20);
        std::vector<uint64_t> values;
        BitWriter stream;
        for (size_t i = 0; i < count; ++i) {
            const uint64_t v = gen.below(1000);
            values.push_back(v);
            encode_selfdelim(v, stream);
        }
        BitReader rd(stream.bytes(), stream.bit_size());
        for (uint64_t v : values) CHECK(decode_selfdelim(rd) == v);
        CHECK(rd.remaining() == 0);
    }

    // Truncated codeword.
    BitWriter t;
    t.push_bit(true);
    BitReader rt(t.bytes(), t.bit_size());
    CHECK_THROWS_AS(decode_selfdelim(rt), codec_error);
}

TEST_CASE("trace descriptor round-trip on hand examples") {
    const auto H = seq({2, 1}, 4);

    const SortTrace id = shellsort(Permutation::identity(4), H);
    const Descriptor d_id = encode_trace(id);
    CHECK(d_id.bit_len == 16);  // 8 zero counts, 2 bits each
    CHECK(decode_trace(d_id).is_identity());

    const Permutation rev = Permutation::from_keys({4, 3, 2, 1});
    const Descriptor d_rev = encode_trace(shellsort(rev, H));
    CHECK(decode_trace(d_rev) == rev);
}

TEST_CASE("trace descriptor round-trip, exhaustive n <= 7") {
    uint64_t failures = 0, checked = 0;
    for (int n = 3; n <= 7; ++n) {
        for (std::vector<int32_t> hs : {std::vector<int32_t>{2, 1}, {3, 1}, {4, 2, 1}}) {
            if (hs.front() >= n) continue;
            const auto H = seq(std::move(hs), n);
            for_each_permutation(n, [&](const std::vector<int32_t>& keys) {
                const Permutation p = Permutation::unchecked(keys);
                ++checked;
                if (decode_trace(encode_trace(shellsort(p, H))) != p) ++failures;
            });
        }
    }
    CHECK(checked == 6 + 48 + 360 + 2160 + 5040 * 3);
    CHECK(failures == 0);
}

TEST_CASE("trace descriptor round-trip, seeded random large n") {
    for (Family f : generated_families()) {
        for (int n : {100, 1000}) {
            const IncrementSequence H = generate(f, n);
            for (int t = 0; t < 20; ++t) {
                const uint64_t s = derive_seed(7, static_cast<uint64_t>(n),
                                               static_cast<uint64_t>(t));
                const Permutation p = random_permutation(n, Seed{s});
                CHECK(decode_trace(encode_trace(shellsort(p, H))) == p);
            }
        }
    }
}

TEST_CASE("descriptor injectivity, exhaustive n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const auto H = seq({2, 1}, n);
        std::set<std::pair<std::vector<uint8_t>, size_t>> seen;
        uint64_t dups = 0, count = 0;
        for_each_permutation(n, [&](const std::vector<int32_t>& keys) {
            const Descriptor d = encode_trace(shellsort(Permutation::unchecked(keys), H));
            if (!seen.insert({d.bits, d.bit_len}).second) ++dups;
            ++count;
        });
        CHECK(count == factorial(n));
        CHECK(dups == 0);
    }
}

TEST_CASE("descr_length accounting") {
    const auto H = seq({2, 1}, 4);
    const Descriptor d = encode_trace(shellsort(Permutation::identity(4), H));
    const DescriptorLength len = descr_length(d);
    CHECK(len.total_bits == 16);
    CHECK(len.payload_bits == 0);  // all counts zero
    CHECK(len.overhead_bits == 16);

    const Descriptor dr =
        encode_trace(shellsort(Permutation::from_keys({4, 3, 2, 1}), H));
    const DescriptorLength lr = descr_length(dr);
    CHECK(lr.total_bits >= lr.payload_bits);
    CHECK(lr.total_bits == lr.payload_bits + lr.overhead_bits);
}

TEST_CASE("mean trace descriptor length beats the entropy floor at n = 7") {
    uint64_t total_bits = 0, count = 0;
    const auto H = seq({2, 1}, 7);
    for_each_permutation(7, [&](const std::vector<int32_t>& keys) {
        total_bits += encode_trace(shellsort(Permutation::unchecked(keys), H)).bit_len;
        ++count;
    });
    const double mean = static_cast<double>(total_bits) / static_cast<double>(count);
    CHECK(mean >= std::log2(5040.0));  // log2(7!) ~ 12.3
}

TEST_CASE("per-key-totals descriptor stores and reloads totals") {
    const auto H = seq({2, 1}, 6);
    const Permutation p = Permutation::from_keys({4, 3, 2, 1, 6, 5});
    const SortTrace t = shellsort(p, H);
    const auto totals = t.per_key_totals();
    const Descriptor d = encode_per_key_totals(totals, H, 6);
    CHECK(read_per_key_totals(d) == totals);
    const DescriptorLength len = descr_length(d);
    CHECK(len.total_bits == d.bit_len);
    CHECK(len.total_bits == len.payload_bits + len.overhead_bits);
}

TEST_CASE("per-key-totals reconstruction is exact when displacements are honest") {
    // The candidate schedule's totals decode back to the permutation when the
    // zero-displacement keys happen to sit in increasing order.
    const auto H = seq({2, 1}, 3);
    const Permutation p = Permutation::from_keys({3, 1, 2});
    const MinorSchedule cand = minor_candidate(p, H);
    const Descriptor d = encode_per_key_totals(cand.per_key_totals(), H, 3);
    CHECK(decode_per_key_totals(d) == p);
}

TEST_CASE("descriptor file format round-trips") {
    const auto H = seq({3, 1}, 6);
    const Permutation p = Permutation::from_keys({6, 2, 4, 1, 5, 3});
    const Descriptor d = encode_trace(shellsort(p, H));

    const auto bytes = descriptor_to_bytes(d);
    CHECK(std::memcmp(bytes.data(), "SHLDESC1", 8) == 0);
    const Descriptor back = descriptor_from_bytes(bytes);
    CHECK(back.n == d.n);
    CHECK(back.increments == d.increments);
    CHECK(back.scheme == d.scheme);
    CHECK(back.bit_len == d.bit_len);
    CHECK(decode_trace(back) == p);

    const auto path = std::filesystem::temp_directory_path() / "sslab_codec_test.desc";
    write_descriptor_file(d, path);
    CHECK(decode_trace(read_descriptor_file(path)) == p);
    std::filesystem::remove(path);

    // Corrupt magic is rejected.
    auto bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS(descriptor_from_bytes(bad), codec_error);
}

TEST_CASE("malformed trace payloads are rejected") {
    const auto H = seq({2, 1}, 4);
    // Counts inconsistent with chain lengths: first count of a chain must be 0.
    BitWriter w;
    for (int i = 0; i < 4; ++i) encode_selfdelim(1, w);  // pass 2 counts, all 1
    for (int i = 0; i < 4; ++i) encode_selfdelim(0, w);  // pass 1 counts
    const size_t bits = w.bit_size();
    const Descriptor d{w.take_bytes(), bits, 4, H, DescriptorScheme::trace};
    CHECK_THROWS_AS(decode_trace(d), codec_error);

    // Truncated payload.
    const Descriptor ok = encode_trace(shellsort(Permutation::from_keys({4, 3, 2, 1}), H));
    Descriptor trunc = ok;
    trunc.bit_len -= 2;
    CHECK_THROWS_AS(decode_trace(trunc), codec_error);
}
