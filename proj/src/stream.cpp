#include "bml/stream.hpp"

#include <algorithm>
#include <utility>

#include "bml/payload.hpp"
#include "bml/prefix.hpp"

namespace bml {

ResidueStream encode(std::span<const std::uint8_t> bytes, const CodecParams& p) {
    const unsigned k = p.prefix_width();
    ResidueStream out{p.modulus(), std::vector<Digit>(2 * std::size_t{k})};
    const std::uint64_t state = encode_payload_into(bytes, p, out.digits);
    write_prefix(bytes.size(), p, std::span<Digit>(out.digits).first(k));
    write_prefix(state, p, std::span<Digit>(out.digits).subspan(k, k));
    return out;
}

namespace {

// Validates the k digits of a header at [offset, offset + k).
std::optional<DecodeError> check_header_digits(std::span<const Digit> header, std::size_t offset,
                                               std::uint64_t m) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] >= m) {
            return DecodeError::digit_out_of_range(offset + i, header[i]);
        }
    }
    return std::nullopt;
}

}  // namespace

Outcome<StreamDecoded, DecodeError> decode_counted(std::span<const Digit> digits, const CodecParams& p,
                                                   std::optional<std::uint64_t> cap) {
    const std::size_t k = p.prefix_width();
    const std::uint64_t m = p.modulus();

    if (digits.size() < k) {
        return DecodeError::truncated_length_prefix(digits.size());
    }
    const auto length_digits = digits.first(k);
    if (auto bad = check_header_digits(length_digits, 0, m)) {
        return *bad;
    }
    auto length = decode_prefix(length_digits, p);
    if (!length) {
        return DecodeError::length_overflow(0);
    }
    if (*length == 0) {
        // The state header is never read, but it still belongs to the
        // message; a bare length header is tolerated.
        return StreamDecoded{{}, std::min(2 * k, digits.size()), std::nullopt};
    }
    if (cap && *length > *cap) {
        return DecodeError::length_cap_exceeded(*length, *cap);
    }

    if (digits.size() < 2 * k) {
        return DecodeError::truncated_state_prefix(digits.size() - k);
    }
    const auto state_digits = digits.subspan(k, k);
    if (auto bad = check_header_digits(state_digits, k, m)) {
        return *bad;
    }
    auto state = decode_prefix(state_digits, p);
    if (!state) {
        return DecodeError::state_out_of_window(0);
    }
    if (*state < p.lower_bound() || *state >= p.window_end()) {
        return DecodeError::state_out_of_window(*state);
    }

    DigitReader reader(digits, m, 2 * k);
    auto payload = decode_payload(*state, reader, *length, p);
    if (!payload) {
        return payload.error();
    }
    return StreamDecoded{std::move(payload->bytes), reader.position(), payload->final_state};
}

Outcome<std::vector<std::uint8_t>, DecodeError> decode(std::span<const Digit> digits, const CodecParams& p,
                                                      std::optional<std::uint64_t> cap) {
    auto decoded = decode_counted(digits, p, cap);
    if (!decoded) {
        return decoded.error();
    }
    return std::move(decoded->bytes);
}

Outcome<ResidueStream, DecodeError> validate_digits(std::span<const Digit> raw, std::uint64_t m) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] >= m) {
            return DecodeError::digit_out_of_range(i, raw[i]);
        }
    }
    return ResidueStream{m, std::vector<Digit>(raw.begin(), raw.end())};
}

}  // namespace bml
