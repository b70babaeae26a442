#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bml/errors.hpp"
#include "bml/outcome.hpp"
#include "bml/params.hpp"

namespace bml {

// Sequential cursor over untrusted digits. Every digit handed out has been
// checked against the modulus; positions are absolute offsets into the
// underlying sequence.
class DigitReader {
public:
    DigitReader(std::span<const Digit> digits, std::uint64_t modulus, std::size_t start = 0) noexcept
        : digits_(digits), modulus_(modulus), pos_(start) {}

    Outcome<Digit, DecodeError> next() noexcept {
        Digit d;
        if (!try_next(d)) {
            return failure();
        }
        return d;
    }

    // Hot-path variant: false when the next digit is missing or out of
    // range, in which case failure() says which.
    bool try_next(Digit& d) noexcept {
        if (pos_ >= digits_.size() || digits_[pos_] >= modulus_) {
            return false;
        }
        d = digits_[pos_++];
        return true;
    }

    DecodeError failure() const noexcept {
        if (pos_ >= digits_.size()) {
            return DecodeError::payload_exhausted(pos_);
        }
        return DecodeError::digit_out_of_range(pos_, digits_[pos_]);
    }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return digits_.size() - pos_; }

private:
    std::span<const Digit> digits_;
    std::uint64_t modulus_;
    std::size_t pos_;
};

// Encoder-side renormalization: while x >= T, emit x mod m (low digit first)
// and divide by m. Returns the final x < T.
template <typename Sink>
std::uint64_t renorm_encode(std::uint64_t x, const CodecParams& p, Sink&& sink) {
    const std::uint64_t m = p.modulus();
    const std::uint64_t threshold = p.threshold();
    const Divider& div = p.divider();
    while (x >= threshold) {
        const std::uint64_t q = div.quotient(x);
        sink(static_cast<Digit>(x - q * m));
        x = q;
    }
    return x;
}

// Decoder-side renormalization: while x < L, pull one digit d and set
// x = x*m + d. Requires x < L*m; on success L <= x < L*m.
Outcome<std::uint64_t, DecodeError> renorm_decode(std::uint64_t x, DigitReader& reader, const CodecParams& p);

struct PayloadResult {
    std::uint64_t state;
    std::vector<Digit> payload;  // FIFO order
};

// Scans bytes right to left from state L, renormalizing before every byte
// update x = 256x + b. The emitted digits are reversed into FIFO order.
PayloadResult encode_payload(std::span<const std::uint8_t> bytes, const CodecParams& p);

// Same transducer, appending the FIFO payload to out and returning the final
// state. Used by the stream encoder to avoid an intermediate buffer.
std::uint64_t encode_payload_into(std::span<const std::uint8_t> bytes, const CodecParams& p,
                                  std::vector<Digit>& out);

struct PayloadDecoded {
    std::vector<std::uint8_t> bytes;
    // State after the last renormalization; equals L for a genuine encoding.
    std::uint64_t final_state;
};

// Emits count bytes (x mod 256, then x /= 256, then renormalize) from a state
// in [L, L*m). Digits past the ones needed are left unread.
Outcome<PayloadDecoded, DecodeError> decode_payload(std::uint64_t state, DigitReader& reader,
                                                    std::uint64_t count, const CodecParams& p);

}  // namespace bml
