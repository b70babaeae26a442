#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bml/outcome.hpp"
#include "bml/stream.hpp"

namespace bml {

// On-disk representations of a residue stream.
//
//   dec   decimal digits separated by whitespace and/or commas; carries no
//         modulus, so the reader must be told m
//   json  {"m": <modulus>, "digits": [...]}
//   bin   "BML1", m as u64 LE, digit count as u64 LE, then each digit as
//         w(m) LE bytes, w(m) = least w >= 1 with 256^w >= m
enum class StreamFormat { Dec, Json, Bin };

std::optional<StreamFormat> parse_format(std::string_view name) noexcept;
const char* to_string(StreamFormat format) noexcept;

// Bytes per digit in the bin format.
unsigned bin_digit_width(std::uint64_t m) noexcept;

struct FormatError {
    enum class Kind {
        Malformed,        // syntax or layout problem
        MissingModulus,   // dec input without an externally supplied m
        ModulusMismatch,  // file's m differs from the one requested
        DigitOutOfRange,  // a digit is >= m
    };
    Kind kind = Kind::Malformed;
    std::string detail;
    std::uint64_t position = 0;
    std::uint64_t value = 0;
};

std::string serialize(const ResidueStream& stream, StreamFormat format);

// expected_m is required for dec and checked against the file for json/bin.
Outcome<ResidueStream, FormatError> deserialize(std::string_view data, StreamFormat format,
                                                std::optional<std::uint64_t> expected_m);

}  // namespace bml
