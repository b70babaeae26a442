#include "bml/textcodec.hpp"

namespace bml {

std::optional<std::size_t> find_invalid_utf8(std::span<const std::uint8_t> bytes) noexcept {
    const std::size_t n = bytes.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t lead = bytes[i];
        if (lead < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        // Allowed range of the second byte; excludes overlongs, surrogates
        // and code points above U+10FFFF.
        std::uint8_t lo = 0x80, hi = 0xBF;
        if (lead >= 0xC2 && lead <= 0xDF) {
            len = 2;
        } else if (lead >= 0xE0 && lead <= 0xEF) {
            len = 3;
            if (lead == 0xE0) lo = 0xA0;
            if (lead == 0xED) hi = 0x9F;
        } else if (lead >= 0xF0 && lead <= 0xF4) {
            len = 4;
            if (lead == 0xF0) lo = 0x90;
            if (lead == 0xF4) hi = 0x8F;
        } else {
            return i;
        }
        if (n - i < len || bytes[i + 1] < lo || bytes[i + 1] > hi) {
            return i;
        }
        for (std::size_t j = 2; j < len; ++j) {
            if ((bytes[i + j] & 0xC0) != 0x80) {
                return i;
            }
        }
        i += len;
    }
    return std::nullopt;
}

Outcome<TextPayload, InvalidUtf8> TextPayload::from_utf8(std::string_view utf8) {
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(utf8.data()), utf8.size());
    if (auto bad = find_invalid_utf8(bytes)) {
        return InvalidUtf8{*bad};
    }
    return TextPayload(std::string(utf8));
}

Outcome<TextPayload, InvalidScalar> TextPayload::from_scalars(std::u32string_view scalars) {
    std::string out;
    out.reserve(scalars.size());
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        const char32_t c = scalars[i];
        if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
            return InvalidScalar{i, c};
        }
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
        } else if (c < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (c >> 6)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        } else if (c < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (c >> 12)));
            out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (c >> 18)));
            out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        }
    }
    return TextPayload(std::move(out));
}

std::u32string TextPayload::scalars() const {
    std::u32string out;
    out.reserve(utf8_.size());
    const auto* s = reinterpret_cast<const std::uint8_t*>(utf8_.data());
    const std::size_t n = utf8_.size();
    for (std::size_t i = 0; i < n;) {
        const std::uint8_t lead = s[i];
        char32_t c;
        std::size_t len;
        if (lead < 0x80) {
            c = lead;
            len = 1;
        } else if (lead < 0xE0) {
            c = lead & 0x1F;
            len = 2;
        } else if (lead < 0xF0) {
            c = lead & 0x0F;
            len = 3;
        } else {
            c = lead & 0x07;
            len = 4;
        }
        for (std::size_t j = 1; j < len; ++j) {
            c = (c << 6) | (s[i + j] & 0x3F);
        }
        out.push_back(c);
        i += len;
    }
    return out;
}

ResidueStream encode_text(const TextPayload& text, const CodecParams& p) { return encode(text.bytes(), p); }

Outcome<TextPayload, TextError> decode_text(std::span<const Digit> digits, const CodecParams& p,
                                            std::optional<std::uint64_t> cap) {
    auto bytes = decode(digits, p, cap);
    if (!bytes) {
        return TextError{bytes.error()};
    }
    const auto& raw = *bytes;
    auto text = TextPayload::from_utf8(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    if (!text) {
        return TextError{text.error()};
    }
    return std::move(text).value();
}

}  // namespace bml
