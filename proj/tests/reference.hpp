#pragma once

// Test-only model of the codec, written directly from the algorithm
// description with 128-bit arithmetic and no shared code with the library.
// Used to cross-check the implementation and to derive frozen vectors.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace reftest {

__extension__ typedef unsigned __int128 u128;

inline constexpr u128 kTwo64 = u128{1} << 64;

inline unsigned ref_prefix_width(std::uint64_t m) {
    unsigned k = 0;
    u128 power = 1;
    while (power < kTwo64) {
        power *= m;
        ++k;
    }
    return k;
}

inline std::uint64_t ref_lower_bound(std::uint64_t m) {
    const u128 max = kTwo64 - 1;
    return static_cast<std::uint64_t>(256 * (max / (u128{256} * m)));
}

inline std::uint64_t ref_threshold(std::uint64_t m) { return ref_lower_bound(m) / 256 * m; }

inline u128 ref_pow(std::uint64_t m, unsigned e) {
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= m;
    return r;
}

inline std::vector<std::uint64_t> ref_prefix(u128 x, std::uint64_t m, unsigned k) {
    std::vector<std::uint64_t> out;
    for (unsigned i = 0; i < k; ++i) {
        out.push_back(static_cast<std::uint64_t>(x % m));
        x /= m;
    }
    return out;
}

// Sum of d_i * m^i over the digits, little-endian.
inline u128 ref_eval_le(const std::vector<std::uint64_t>& digits, std::uint64_t m) {
    u128 v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * m + digits[i];
    return v;
}

struct RefEncoded {
    std::vector<std::uint64_t> stream;
    std::uint64_t state;
    std::vector<std::uint64_t> payload;
};

inline RefEncoded ref_encode(const std::vector<std::uint8_t>& bytes, std::uint64_t m) {
    const unsigned k = ref_prefix_width(m);
    const u128 threshold = ref_threshold(m);
    u128 x = ref_lower_bound(m);
    std::vector<std::uint64_t> emitted;
    for (std::size_t i = bytes.size(); i-- > 0;) {
        while (x >= threshold) {
            emitted.push_back(static_cast<std::uint64_t>(x % m));
            x /= m;
        }
        x = 256 * x + bytes[i];
    }
    std::reverse(emitted.begin(), emitted.end());
    RefEncoded out;
    out.state = static_cast<std::uint64_t>(x);
    out.payload = emitted;
    out.stream = ref_prefix(bytes.size(), m, k);
    const auto s = ref_prefix(x, m, k);
    out.stream.insert(out.stream.end(), s.begin(), s.end());
    out.stream.insert(out.stream.end(), emitted.begin(), emitted.end());
    return out;
}

// Straight simulation of the staged decoder on a well-formed stream; reports
// the internal state after the final renormalization.
struct RefDecoded {
    std::vector<std::uint8_t> bytes;
    u128 final_state = 0;
    std::size_t consumed = 0;
    bool exhausted = false;
};

inline RefDecoded ref_decode(const std::vector<std::uint64_t>& digits, std::uint64_t m) {
    const unsigned k = ref_prefix_width(m);
    const u128 lower = ref_lower_bound(m);
    RefDecoded out;
    const std::vector<std::uint64_t> len_digits(digits.begin(), digits.begin() + k);
    const u128 len = ref_eval_le(len_digits, m);
    out.consumed = k;
    if (len == 0) return out;
    const std::vector<std::uint64_t> state_digits(digits.begin() + k, digits.begin() + 2 * k);
    u128 x = ref_eval_le(state_digits, m);
    std::size_t pos = 2 * k;
    for (u128 i = 0; i < len; ++i) {
        out.bytes.push_back(static_cast<std::uint8_t>(x % 256));
        x /= 256;
        while (x < lower) {
            if (pos >= digits.size()) {
                out.exhausted = true;
                return out;
            }
            x = x * m + digits[pos++];
        }
    }
    out.final_state = x;
    out.consumed = pos;
    return out;
}

// Moduli exercised by the stream-level property suites.
inline const std::vector<std::uint64_t> kStreamModuli = {2, 3, 13, 50, 65, 251, 257, 65537, 72057594037927935ULL};

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

// Lengths weighted toward boundaries: half from the boundary set, half
// uniform in [0, 4096].
inline std::size_t boundary_weighted_length(std::mt19937_64& rng) {
    static const std::size_t kBoundaries[] = {0, 1, 2, 31, 32, 255, 256, 1024, 65536};
    if (rng() % 2 == 0) {
        return kBoundaries[rng() % std::size(kBoundaries)];
    }
    return static_cast<std::size_t>(rng() % 4097);
}

inline std::vector<std::uint64_t> random_digits(std::mt19937_64& rng, std::size_t n, std::uint64_t m) {
    std::vector<std::uint64_t> out(n);
    for (auto& d : out) d = rng() % m;
    return out;
}

}  // namespace reftest
