#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sslab/errors.hpp"

namespace sslab {

// Append-only bit buffer, MSB-first within each byte.
class BitWriter {
public:
    void push_bit(bool b) {
        const size_t byte = bit_len_ / 8;
        if (byte == bytes_.size()) bytes_.push_back(0);
        if (b) bytes_[byte] |= static_cast<uint8_t>(0x80u >> (bit_len_ % 8));
        ++bit_len_;
    }

    // Low `width` bits of v, most significant first.
    void push_bits(uint64_t v, int width) {
        for (int i = width - 1; i >= 0; --i) push_bit((v >> i) & 1u);
    }

    size_t bit_size() const { return bit_len_; }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::vector<uint8_t> take_bytes() { return std::move(bytes_); }

    // Bit string as text, for tests and dumps.
    std::string to_string() const;

private:
    std::vector<uint8_t> bytes_;
    size_t bit_len_ = 0;
};

class BitReader {
public:
    BitReader(const uint8_t* data, size_t bit_len) : data_(data), bit_len_(bit_len) {}
    explicit BitReader(const std::vector<uint8_t>& bytes)
        : data_(bytes.data()), bit_len_(bytes.size() * 8) {}
    BitReader(const std::vector<uint8_t>& bytes, size_t bit_len)
        : data_(bytes.data()), bit_len_(bit_len) {}

    bool read_bit() {
        if (cursor_ >= bit_len_) throw codec_error("bit stream exhausted");
        const bool b = (data_[cursor_ / 8] >> (7 - cursor_ % 8)) & 1u;
        ++cursor_;
        return b;
    }

    uint64_t read_bits(int width) {
        uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
        return v;
    }

    size_t cursor() const { return cursor_; }
    size_t remaining() const { return bit_len_ - cursor_; }

private:
    const uint8_t* data_;
    size_t bit_len_;
    size_t cursor_ = 0;
};

// Number of bits in the plain binary form; bin(0) = "0" has length 1.
inline int binary_length(uint64_t v) {
    int len = 1;
    while (v >>= 1) ++len;
    return len;
}

// Self-delimiting code: every bit of bin(v) doubled except the last, which is
// followed by its complement. Length is exactly 2 * binary_length(v).
void encode_selfdelim(uint64_t v, BitWriter& w);

// Inverse; consumes one codeword from the reader's cursor.
uint64_t decode_selfdelim(BitReader& r);

}  // namespace sslab
