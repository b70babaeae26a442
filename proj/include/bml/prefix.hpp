#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bml/outcome.hpp"
#include "bml/params.hpp"

namespace bml {

// Fixed-width little-endian base-m headers. Every header is exactly
// p.prefix_width() digits wide, regardless of the value.

enum class PrefixError {
    TruncatedPrefix,  // fewer than k digits available
    ValueOverflow,    // digits encode a value >= 2^64
};

std::vector<Digit> encode_prefix(std::uint64_t x, const CodecParams& p);

// Writes exactly k digits, least significant first, to out[0..k).
void write_prefix(std::uint64_t x, const CodecParams& p, std::span<Digit> out);

// Reads the first k digits only. Digits must already be known to be < m.
Outcome<std::uint64_t, PrefixError> decode_prefix(std::span<const Digit> digits, const CodecParams& p);

}  // namespace bml
