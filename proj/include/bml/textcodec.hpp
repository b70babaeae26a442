#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "bml/errors.hpp"
#include "bml/outcome.hpp"
#include "bml/stream.hpp"

namespace bml {

// Recovered bytes are not well-formed UTF-8; offset is the byte index where
// the first bad sequence starts.
struct InvalidUtf8 {
    std::size_t offset = 0;

    friend bool operator==(const InvalidUtf8&, const InvalidUtf8&) = default;
};

// A code point that is not a Unicode scalar value (surrogate or > U+10FFFF).
struct InvalidScalar {
    std::size_t index = 0;
    char32_t value = 0;
};

// Offset of the first ill-formed sequence, or nullopt when bytes are valid UTF-8.
std::optional<std::size_t> find_invalid_utf8(std::span<const std::uint8_t> bytes) noexcept;

// A sequence of Unicode scalar values, held as its UTF-8 encoding.
class TextPayload {
public:
    TextPayload() = default;

    static Outcome<TextPayload, InvalidUtf8> from_utf8(std::string_view utf8);
    static Outcome<TextPayload, InvalidScalar> from_scalars(std::u32string_view scalars);

    const std::string& utf8() const noexcept { return utf8_; }
    std::u32string scalars() const;
    std::span<const std::uint8_t> bytes() const noexcept {
        return {reinterpret_cast<const std::uint8_t*>(utf8_.data()), utf8_.size()};
    }

    friend bool operator==(const TextPayload&, const TextPayload&) = default;

private:
    explicit TextPayload(std::string utf8) : utf8_(std::move(utf8)) {}

    std::string utf8_;
};

using TextError = std::variant<DecodeError, InvalidUtf8>;

ResidueStream encode_text(const TextPayload& text, const CodecParams& p);

Outcome<TextPayload, TextError> decode_text(std::span<const Digit> digits, const CodecParams& p,
                                            std::optional<std::uint64_t> cap = std::nullopt);

}  // namespace bml
