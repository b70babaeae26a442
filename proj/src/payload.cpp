#include "bml/payload.hpp"

#include <algorithm>
#include <bit>

namespace bml {

Outcome<std::uint64_t, DecodeError> renorm_decode(std::uint64_t x, DigitReader& reader, const CodecParams& p) {
    const std::uint64_t m = p.modulus();
    const std::uint64_t lower = p.lower_bound();
    assert(x < p.window_end());
    Digit d;
    while (x < lower) {
        if (!reader.try_next(d)) {
            return reader.failure();
        }
        // x < L and d < m, so x*m + d <= L*m - 1 < 2^64.
        x = x * m + d;
    }
    return x;
}

std::uint64_t encode_payload_into(std::span<const std::uint8_t> bytes, const CodecParams& p,
                                  std::vector<Digit>& out) {
    const std::size_t first = out.size();
    // Each renormalization step strips at least one bit, so log2(m) bits per
    // digit bounds the digit count for n bytes.
    const auto bits_per_digit = static_cast<std::size_t>(std::bit_width(p.modulus()) - 1);
    out.reserve(first + bytes.size() * 8 / bits_per_digit + 2);

    auto sink = [&out](Digit d) { out.push_back(d); };
    std::uint64_t x = p.lower_bound();
    for (auto it = bytes.rbegin(); it != bytes.rend(); ++it) {
        x = renorm_encode(x, p, sink);
        assert(x >= p.lower_bound() / 256);
        assert(x < p.threshold());
        // x < T, so 256x + b <= 256(T - 1) + 255 = L*m - 1.
        x = 256 * x + *it;
        assert(x >= p.lower_bound() && x < p.window_end());
    }
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    return x;
}

PayloadResult encode_payload(std::span<const std::uint8_t> bytes, const CodecParams& p) {
    PayloadResult result{0, {}};
    result.state = encode_payload_into(bytes, p, result.payload);
    return result;
}

Outcome<PayloadDecoded, DecodeError> decode_payload(std::uint64_t state, DigitReader& reader,
                                                    std::uint64_t count, const CodecParams& p) {
    assert(state >= p.lower_bound() && state < p.window_end());
    PayloadDecoded out{{}, state};
    // A byte costs 8 bits and a digit supplies fewer than 64, so the reader's
    // contents bound how much a hostile length can make us reserve.
    const std::uint64_t reachable = 8 + 8 * static_cast<std::uint64_t>(reader.remaining());
    out.bytes.resize(static_cast<std::size_t>(std::min(count, reachable)));

    // Same steps as renorm_decode, inlined to keep the per-digit loop free
    // of error plumbing.
    const std::uint64_t m = p.modulus();
    const std::uint64_t lower = p.lower_bound();
    std::uint64_t x = state;
    Digit d;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i == out.bytes.size()) {
            out.bytes.resize(static_cast<std::size_t>(std::min(count, 2 * i)));
        }
        out.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x & 0xFF);
        x >>= 8;
        while (x < lower) {
            if (!reader.try_next(d)) {
                return reader.failure();
            }
            x = x * m + d;
        }
    }
    out.final_state = x;
    return out;
}

}  // namespace bml
