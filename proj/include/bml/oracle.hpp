#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bml/errors.hpp"
#include "bml/outcome.hpp"
#include "bml/params.hpp"
#include "bml/stream.hpp"

namespace bml {

// Exact whole-payload radix conversion, used as a differential oracle and as
// the performance baseline for the streaming codec.
//
// Wire layout: the usual fixed-width length header for m, then exactly d(n)
// little-endian base-m digits of B = bytes read as a big-endian integer,
// where d(n) is the least d with m^d >= 256^n. The fixed width keeps leading
// zero bytes recoverable.
//
// Conversion is schoolbook: quadratic in the payload size.

inline constexpr std::uint64_t kOracleMaxModulus = 256;

class OracleParams {
public:
    const CodecParams& codec() const noexcept { return codec_; }
    std::uint64_t modulus() const noexcept { return codec_.modulus(); }

private:
    friend Outcome<OracleParams, UnsupportedModulus> oracle_params(std::uint64_t m);
    explicit OracleParams(CodecParams codec) : codec_(codec) {}

    CodecParams codec_;
};

// Accepts 2 <= m <= 256.
Outcome<OracleParams, UnsupportedModulus> oracle_params(std::uint64_t m);

// d(n): least d with m^d >= 256^n, exact.
std::uint64_t oracle_digit_count(std::uint64_t n, std::uint64_t m);

ResidueStream oracle_encode(std::span<const std::uint8_t> bytes, const OracleParams& p);

Outcome<std::vector<std::uint8_t>, DecodeError> oracle_decode(std::span<const Digit> digits, const OracleParams& p,
                                                             std::optional<std::uint64_t> cap = std::nullopt);

}  // namespace bml
