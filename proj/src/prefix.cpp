#include "bml/prefix.hpp"

#include <cassert>

namespace bml {

void write_prefix(std::uint64_t x, const CodecParams& p, std::span<Digit> out) {
    assert(out.size() >= p.prefix_width());
    const std::uint64_t m = p.modulus();
    for (unsigned i = 0; i < p.prefix_width(); ++i) {
        out[i] = x % m;
        x /= m;
    }
    assert(x == 0);
}

std::vector<Digit> encode_prefix(std::uint64_t x, const CodecParams& p) {
    std::vector<Digit> digits(p.prefix_width());
    write_prefix(x, p, digits);
    return digits;
}

Outcome<std::uint64_t, PrefixError> decode_prefix(std::span<const Digit> digits, const CodecParams& p) {
    const unsigned k = p.prefix_width();
    if (digits.size() < k) {
        return PrefixError::TruncatedPrefix;
    }
    const std::uint64_t m = p.modulus();
    std::uint64_t value = 0;
    for (unsigned i = k; i-- > 0;) {
        assert(digits[i] < m);
        if (__builtin_mul_overflow(value, m, &value) || __builtin_add_overflow(value, digits[i], &value)) {
            return PrefixError::ValueOverflow;
        }
    }
    return value;
}

}  // namespace bml
