#include "sslab/bitstream.hpp"

namespace sslab {

std::string BitWriter::to_string() const {
    std::string s;
    s.reserve(bit_len_);
    for (size_t i = 0; i < bit_len_; ++i)
        s.push_back(((bytes_[i / 8] >> (7 - i % 8)) & 1u) ? '1' : '0');
    return s;
}

void encode_selfdelim(uint64_t v, BitWriter& w) {
    const int len = binary_length(v);
    for (int i = len - 1; i > 0; --i) {
        const bool b = (v >> i) & 1u;
        w.push_bit(b);
        w.push_bit(b);
    }
    const bool last = v & 1u;
    w.push_bit(last);
    w.push_bit(!last);
}

uint64_t decode_selfdelim(BitReader& r) {
    uint64_t v = 0;
    for (int len = 0;; ++len) {
        if (len >= 64) throw codec_error("self-delimiting codeword too long");
        const bool a = r.read_bit();
        const bool b = r.read_bit();
        v = (v << 1) | (a ? 1u : 0u);
        if (a != b) return v;
    }
}

}  // namespace sslab
