#include "bml/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bml/prefix.hpp"

namespace bml {

namespace {

__extension__ typedef unsigned __int128 u128;

// Little-endian base-2^64 magnitude.
using Limbs = std::vector<std::uint64_t>;

void trim(Limbs& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// a = a * mul + add
void mul_add_small(Limbs& a, std::uint64_t mul, std::uint64_t add) {
    std::uint64_t carry = add;
    for (auto& limb : a) {
        const u128 t = u128{limb} * mul + carry;
        limb = static_cast<std::uint64_t>(t);
        carry = static_cast<std::uint64_t>(t >> 64);
    }
    if (carry != 0) {
        a.push_back(carry);
    }
}

// a = a / div, returns a % div. Keeps a trimmed.
std::uint64_t divmod_small(Limbs& a, std::uint64_t div) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        const u128 cur = (u128{rem} << 64) | a[i];
        a[i] = static_cast<std::uint64_t>(cur / div);
        rem = static_cast<std::uint64_t>(cur % div);
    }
    trim(a);
    return rem;
}

std::uint64_t bit_length(const Limbs& a) {
    if (a.empty()) {
        return 0;
    }
    return 64 * (a.size() - 1) + static_cast<std::uint64_t>(std::bit_width(a.back()));
}

// Largest j with m^j < 2^64, and m^j itself.
struct Chunk {
    unsigned digits;
    std::uint64_t power;
};

Chunk chunk_for(std::uint64_t m) {
    Chunk c{0, 1};
    while (c.power <= UINT64_MAX / m) {
        c.power *= m;
        ++c.digits;
    }
    return c;
}

}  // namespace

Outcome<OracleParams, UnsupportedModulus> oracle_params(std::uint64_t m) {
    if (m < 2 || m > kOracleMaxModulus) {
        return UnsupportedModulus{m};
    }
    return OracleParams(derive_params(m).value());
}

std::uint64_t oracle_digit_count(std::uint64_t n, std::uint64_t m) {
    if (n == 0) {
        return 0;
    }
    if (std::has_single_bit(m)) {
        const std::uint64_t bits = static_cast<std::uint64_t>(std::countr_zero(m));
        return (8 * n + bits - 1) / bits;
    }
    // m is not a power of two, so m^d == 2^(8n) is impossible and
    // d = floor(8n / log2 m) + 1. Near an integer the float ratio cannot be
    // trusted, so settle it exactly by bit-length of m^d.
    const long double ratio = 8.0L * static_cast<long double>(n) / std::log2(static_cast<long double>(m));
    const long double floor_ratio = std::floor(ratio);
    const auto candidate = static_cast<std::uint64_t>(floor_ratio) + 1;
    if (ratio - floor_ratio > 1e-6L && floor_ratio + 1 - ratio > 1e-6L) {
        return candidate;
    }
    // m^d >= 2^(8n) iff bit_length(m^d) > 8n; check d = candidate - 1 and candidate.
    auto power_bits = [m](std::uint64_t d) {
        Limbs a{1};
        for (std::uint64_t i = 0; i < d; ++i) {
            mul_add_small(a, m, 0);
        }
        return bit_length(a);
    };
    std::uint64_t d = candidate - 1;
    while (power_bits(d) <= 8 * n) {
        ++d;
    }
    return d;
}

ResidueStream oracle_encode(std::span<const std::uint8_t> bytes, const OracleParams& p) {
    const std::uint64_t m = p.modulus();
    const std::uint64_t n = bytes.size();
    const std::uint64_t d = oracle_digit_count(n, m);
    const unsigned k = p.codec().prefix_width();

    ResidueStream out{m, std::vector<Digit>(k + d, 0)};
    write_prefix(n, p.codec(), std::span<Digit>(out.digits).first(k));

    // Big-endian bytes into little-endian 64-bit limbs.
    Limbs value((bytes.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const std::size_t shift = bytes.size() - 1 - i;
        value[shift / 8] |= std::uint64_t{bytes[i]} << (8 * (shift % 8));
    }
    trim(value);

    const Chunk chunk = chunk_for(m);
    std::uint64_t written = 0;
    while (!value.empty() && written < d) {
        std::uint64_t rem = divmod_small(value, chunk.power);
        for (unsigned j = 0; j < chunk.digits && written < d; ++j) {
            out.digits[k + written++] = rem % m;
            rem /= m;
        }
    }
    return out;
}

Outcome<std::vector<std::uint8_t>, DecodeError> oracle_decode(std::span<const Digit> digits, const OracleParams& p,
                                                             std::optional<std::uint64_t> cap) {
    const std::uint64_t m = p.modulus();
    const std::size_t k = p.codec().prefix_width();

    if (digits.size() < k) {
        return DecodeError::truncated_length_prefix(digits.size());
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (digits[i] >= m) {
            return DecodeError::digit_out_of_range(i, digits[i]);
        }
    }
    auto length = decode_prefix(digits.first(k), p.codec());
    if (!length) {
        return DecodeError::length_overflow(0);
    }
    const std::uint64_t n = *length;
    if (cap && n > *cap) {
        return DecodeError::length_cap_exceeded(n, *cap);
    }
    // m <= 256 means d(n) >= n, so this rejects hostile lengths before
    // d(n) is computed.
    const std::uint64_t available = digits.size() - k;
    if (n > available) {
        return DecodeError::payload_exhausted(digits.size());
    }
    const std::uint64_t d = oracle_digit_count(n, m);
    if (d > available) {
        return DecodeError::payload_exhausted(digits.size());
    }
    const auto payload = digits.subspan(k, static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < payload.size(); ++i) {
        if (payload[i] >= m) {
            return DecodeError::digit_out_of_range(k + i, payload[i]);
        }
    }

    // Horner from the most significant digit, one 64-bit chunk at a time.
    const Chunk chunk = chunk_for(m);
    Limbs value;
    value.reserve(static_cast<std::size_t>(n / 8 + 2));
    std::size_t i = payload.size();
    while (i > 0) {
        const std::size_t take = std::min<std::size_t>(chunk.digits, i);
        std::uint64_t scale = 1;
        std::uint64_t add = 0;
        for (std::size_t j = 0; j < take; ++j) {
            --i;
            scale *= m;
            add = add * m + payload[i];
        }
        mul_add_small(value, scale, add);
        trim(value);
    }
    if (bit_length(value) > 8 * n) {
        return DecodeError::value_overflow(k);
    }

    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < bytes.size(); ++b) {
        const std::size_t limb = b / 8;
        if (limb < value.size()) {
            bytes[bytes.size() - 1 - b] = static_cast<std::uint8_t>(value[limb] >> (8 * (b % 8)));
        }
    }
    return bytes;
}

}  // namespace bml
