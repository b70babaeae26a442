#pragma once

#include <cstdint>
#include <string>

namespace bml {

struct UnsupportedModulus {
    std::uint64_t modulus = 0;

    std::string message() const;
};

enum class DecodeErrorKind {
    TruncatedLengthPrefix,
    TruncatedStatePrefix,
    PayloadExhausted,
    DigitOutOfRange,
    LengthOverflow,
    LengthCapExceeded,
    StateOutOfWindow,
    // Only produced by the big-integer baseline: the payload integer does
    // not fit in the declared number of bytes.
    ValueOverflow,
};

const char* to_string(DecodeErrorKind kind) noexcept;

// A classified decode failure. Which fields are meaningful depends on kind:
//   TruncatedLengthPrefix / TruncatedStatePrefix: position = digits available
//   PayloadExhausted: position = offset where the next digit was needed
//   DigitOutOfRange: position = offset, value = offending digit
//   LengthOverflow: position = offset of the length header
//   LengthCapExceeded: value = declared length, limit = cap
//   StateOutOfWindow: value = decoded state (0 when it overflowed 64 bits)
//   ValueOverflow: position = offset of the payload
struct DecodeError {
    DecodeErrorKind kind{};
    std::uint64_t position = 0;
    std::uint64_t value = 0;
    std::uint64_t limit = 0;

    static DecodeError truncated_length_prefix(std::uint64_t available) {
        return {DecodeErrorKind::TruncatedLengthPrefix, available, 0, 0};
    }
    static DecodeError truncated_state_prefix(std::uint64_t available) {
        return {DecodeErrorKind::TruncatedStatePrefix, available, 0, 0};
    }
    static DecodeError payload_exhausted(std::uint64_t position) {
        return {DecodeErrorKind::PayloadExhausted, position, 0, 0};
    }
    static DecodeError digit_out_of_range(std::uint64_t position, std::uint64_t digit) {
        return {DecodeErrorKind::DigitOutOfRange, position, digit, 0};
    }
    static DecodeError length_overflow(std::uint64_t position) {
        return {DecodeErrorKind::LengthOverflow, position, 0, 0};
    }
    static DecodeError length_cap_exceeded(std::uint64_t declared, std::uint64_t cap) {
        return {DecodeErrorKind::LengthCapExceeded, 0, declared, cap};
    }
    static DecodeError state_out_of_window(std::uint64_t state) {
        return {DecodeErrorKind::StateOutOfWindow, 0, state, 0};
    }
    static DecodeError value_overflow(std::uint64_t position) {
        return {DecodeErrorKind::ValueOverflow, position, 0, 0};
    }

    std::string message() const;

    friend bool operator==(const DecodeError&, const DecodeError&) = default;
};

}  // namespace bml
