#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bml/errors.hpp"
#include "bml/outcome.hpp"
#include "bml/params.hpp"

namespace bml {

// Cap applied by the command-line tool when the caller does not choose one.
inline constexpr std::uint64_t kDefaultDecodeCap = std::uint64_t{1} << 30;

// Digits tagged with their modulus. Every digit is < modulus.
struct ResidueStream {
    std::uint64_t modulus = 0;
    std::vector<Digit> digits;

    friend bool operator==(const ResidueStream&, const ResidueStream&) = default;
};

// len || state || payload. Length is 2k + |payload|.
ResidueStream encode(std::span<const std::uint8_t> bytes, const CodecParams& p);

struct StreamDecoded {
    std::vector<std::uint8_t> bytes;
    // Digits of the input that belong to this message: 2k + payload digits.
    // For an empty message this is 2k (clamped to the input size) even
    // though the state header is skipped. Anything after is ignored.
    std::size_t consumed = 0;
    // Internal payload state after the last byte; absent for empty messages.
    std::optional<std::uint64_t> final_state;
};

// Decodes one message from the front of an untrusted digit sequence.
// Trailing digits beyond the message are not inspected. When cap is set, a
// declared length above it is rejected before any payload work.
Outcome<std::vector<std::uint8_t>, DecodeError> decode(std::span<const Digit> digits, const CodecParams& p,
                                                      std::optional<std::uint64_t> cap = std::nullopt);

Outcome<StreamDecoded, DecodeError> decode_counted(std::span<const Digit> digits, const CodecParams& p,
                                                   std::optional<std::uint64_t> cap = std::nullopt);

Outcome<ResidueStream, DecodeError> validate_digits(std::span<const Digit> raw, std::uint64_t m);

}  // namespace bml
