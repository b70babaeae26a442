#include "bml/errors.hpp"

#include <string>

namespace bml {

std::string UnsupportedModulus::message() const {
    return "unsupported modulus " + std::to_string(modulus) + " (supported range is [2, " +
           std::to_string(UINT64_MAX / 256) + "])";
}

const char* to_string(DecodeErrorKind kind) noexcept {
    switch (kind) {
        case DecodeErrorKind::TruncatedLengthPrefix: return "TruncatedLengthPrefix";
        case DecodeErrorKind::TruncatedStatePrefix: return "TruncatedStatePrefix";
        case DecodeErrorKind::PayloadExhausted: return "PayloadExhausted";
        case DecodeErrorKind::DigitOutOfRange: return "DigitOutOfRange";
        case DecodeErrorKind::LengthOverflow: return "LengthOverflow";
        case DecodeErrorKind::LengthCapExceeded: return "LengthCapExceeded";
        case DecodeErrorKind::StateOutOfWindow: return "StateOutOfWindow";
        case DecodeErrorKind::ValueOverflow: return "ValueOverflow";
    }
    return "Unknown";
}

std::string DecodeError::message() const {
    std::string out = to_string(kind);
    switch (kind) {
        case DecodeErrorKind::TruncatedLengthPrefix:
        case DecodeErrorKind::TruncatedStatePrefix:
            out += ": header needs more digits, only " + std::to_string(position) + " available";
            break;
        case DecodeErrorKind::PayloadExhausted:
            out += ": stream ended at digit " + std::to_string(position) + " while payload digits remained";
            break;
        case DecodeErrorKind::DigitOutOfRange:
            out += ": digit " + std::to_string(value) + " at position " + std::to_string(position) +
                   " is not below the modulus";
            break;
        case DecodeErrorKind::LengthOverflow:
            out += ": length header at position " + std::to_string(position) + " encodes a value >= 2^64";
            break;
        case DecodeErrorKind::LengthCapExceeded:
            out += ": declared length " + std::to_string(value) + " exceeds cap " + std::to_string(limit);
            break;
        case DecodeErrorKind::StateOutOfWindow:
            out += ": state header " + std::to_string(value) + " is outside the normalization window";
            break;
        case DecodeErrorKind::ValueOverflow:
            out += ": payload at position " + std::to_string(position) + " does not fit the declared length";
            break;
    }
    return out;
}

}  // namespace bml
