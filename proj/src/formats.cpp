#include "bml/formats.hpp"

#include <cctype>
#include <charconv>
#include <cstring>

#include "json.hpp"

namespace bml {

namespace {

constexpr char kMagic[4] = {'B', 'M', 'L', '1'};
constexpr std::size_t kBinHeader = 4 + 8 + 8;

void put_le(std::string& out, std::uint64_t v, unsigned width) {
    for (unsigned i = 0; i < width; ++i) {
        out.push_back(static_cast<char>(v & 0xFF));
        v >>= 8;
    }
}

std::uint64_t get_le(std::string_view in, std::size_t at, unsigned width) {
    std::uint64_t v = 0;
    for (unsigned i = width; i-- > 0;) {
        v = (v << 8) | static_cast<std::uint8_t>(in[at + i]);
    }
    return v;
}

FormatError malformed(std::string detail) { return {FormatError::Kind::Malformed, std::move(detail), 0, 0}; }

Outcome<ResidueStream, FormatError> checked(std::uint64_t m, std::vector<Digit> digits,
                                            std::optional<std::uint64_t> expected_m) {
    if (expected_m && *expected_m != m) {
        return FormatError{FormatError::Kind::ModulusMismatch,
                           "file has m=" + std::to_string(m) + ", expected " + std::to_string(*expected_m), 0, m};
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= m) {
            return FormatError{FormatError::Kind::DigitOutOfRange,
                               "digit " + std::to_string(digits[i]) + " at position " + std::to_string(i) +
                                   " is not below m=" + std::to_string(m),
                               i, digits[i]};
        }
    }
    return ResidueStream{m, std::move(digits)};
}

Outcome<ResidueStream, FormatError> read_dec(std::string_view data, std::optional<std::uint64_t> expected_m) {
    if (!expected_m) {
        return FormatError{FormatError::Kind::MissingModulus, "dec format needs an explicit modulus", 0, 0};
    }
    std::vector<Digit> digits;
    const char* p = data.data();
    const char* end = p + data.size();
    while (p != end) {
        if (std::isspace(static_cast<unsigned char>(*p)) || *p == ',') {
            ++p;
            continue;
        }
        Digit d = 0;
        auto [next, ec] = std::from_chars(p, end, d);
        if (ec != std::errc{} || (next != end && !std::isspace(static_cast<unsigned char>(*next)) && *next != ',')) {
            return malformed("bad decimal digit at byte " + std::to_string(p - data.data()));
        }
        digits.push_back(d);
        p = next;
    }
    return checked(*expected_m, std::move(digits), std::nullopt);
}

Outcome<ResidueStream, FormatError> read_json(std::string_view data, std::optional<std::uint64_t> expected_m) {
    const auto doc = nlohmann::json::parse(data, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        return malformed("not a JSON object");
    }
    const auto m_it = doc.find("m");
    const auto digits_it = doc.find("digits");
    if (m_it == doc.end() || !m_it->is_number_unsigned()) {
        return malformed("missing or non-integer \"m\"");
    }
    if (digits_it == doc.end() || !digits_it->is_array()) {
        return malformed("missing \"digits\" array");
    }
    std::vector<Digit> digits;
    digits.reserve(digits_it->size());
    for (const auto& d : *digits_it) {
        if (!d.is_number_unsigned()) {
            return malformed("digit " + std::to_string(digits.size()) + " is not a non-negative integer");
        }
        digits.push_back(d.get<Digit>());
    }
    return checked(m_it->get<std::uint64_t>(), std::move(digits), expected_m);
}

Outcome<ResidueStream, FormatError> read_bin(std::string_view data, std::optional<std::uint64_t> expected_m) {
    if (data.size() < kBinHeader || std::memcmp(data.data(), kMagic, 4) != 0) {
        return malformed("missing BML1 header");
    }
    const std::uint64_t m = get_le(data, 4, 8);
    const std::uint64_t count = get_le(data, 12, 8);
    if (m < 2) {
        return malformed("modulus " + std::to_string(m) + " in header is below 2");
    }
    const unsigned w = bin_digit_width(m);
    if (count > (data.size() - kBinHeader) / w || (data.size() - kBinHeader) != count * w) {
        return malformed("digit count " + std::to_string(count) + " does not match " +
                         std::to_string(data.size() - kBinHeader) + " body bytes");
    }
    std::vector<Digit> digits(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        digits[i] = get_le(data, kBinHeader + i * w, w);
    }
    return checked(m, std::move(digits), expected_m);
}

}  // namespace

std::optional<StreamFormat> parse_format(std::string_view name) noexcept {
    if (name == "dec") return StreamFormat::Dec;
    if (name == "json") return StreamFormat::Json;
    if (name == "bin") return StreamFormat::Bin;
    return std::nullopt;
}

const char* to_string(StreamFormat format) noexcept {
    switch (format) {
        case StreamFormat::Dec: return "dec";
        case StreamFormat::Json: return "json";
        case StreamFormat::Bin: return "bin";
    }
    return "?";
}

unsigned bin_digit_width(std::uint64_t m) noexcept {
    // Digits are at most m - 1, which needs ceil(bits(m - 1) / 8) bytes.
    unsigned w = 1;
    std::uint64_t top = (m - 1) >> 8;
    while (top != 0) {
        ++w;
        top >>= 8;
    }
    return w;
}

std::string serialize(const ResidueStream& stream, StreamFormat format) {
    std::string out;
    switch (format) {
        case StreamFormat::Dec: {
            for (std::size_t i = 0; i < stream.digits.size(); ++i) {
                if (i != 0) out.push_back(' ');
                out += std::to_string(stream.digits[i]);
            }
            out.push_back('\n');
            break;
        }
        case StreamFormat::Json: {
            nlohmann::json doc;
            doc["m"] = stream.modulus;
            doc["digits"] = stream.digits;
            out = doc.dump();
            out.push_back('\n');
            break;
        }
        case StreamFormat::Bin: {
            const unsigned w = bin_digit_width(stream.modulus);
            out.reserve(kBinHeader + stream.digits.size() * w);
            out.append(kMagic, 4);
            put_le(out, stream.modulus, 8);
            put_le(out, stream.digits.size(), 8);
            for (Digit d : stream.digits) {
                put_le(out, d, w);
            }
            break;
        }
    }
    return out;
}

Outcome<ResidueStream, FormatError> deserialize(std::string_view data, StreamFormat format,
                                                std::optional<std::uint64_t> expected_m) {
    switch (format) {
        case StreamFormat::Dec: return read_dec(data, expected_m);
        case StreamFormat::Json: return read_json(data, expected_m);
        case StreamFormat::Bin: return read_bin(data, expected_m);
    }
    return malformed("unknown format");
}

}  // namespace bml
