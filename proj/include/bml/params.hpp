#pragma once

#include <cstdint>

#include "bml/divider.hpp"
#include "bml/errors.hpp"
#include "bml/outcome.hpp"

namespace bml {

// A base-m symbol. Valid digits lie in [0, m).
using Digit = std::uint64_t;

// Largest supported modulus: floor((2^64 - 1) / 256). Above it the decoder
// lower bound would drop below 256.
inline constexpr std::uint64_t kMaxModulus = UINT64_MAX / 256;

// All derived constants for one modulus. Only derive_params() builds one, so
// holding a CodecParams means the invariants below hold:
//   m^k >= 2^64 > m^(k-1)
//   256 <= L, 256 | L, L*m <= 2^64 - 1
//   T = (L / 256) * m >= m
class CodecParams {
public:
    std::uint64_t modulus() const noexcept { return modulus_; }
    // k: digits per fixed-width header.
    unsigned prefix_width() const noexcept { return prefix_width_; }
    // L: bottom of the normalization window and the encoder's initial state.
    std::uint64_t lower_bound() const noexcept { return lower_bound_; }
    // T: the encoder renormalizes until the state is below this value.
    std::uint64_t threshold() const noexcept { return threshold_; }
    // L*m: exclusive top of the normalization window.
    std::uint64_t window_end() const noexcept { return lower_bound_ * modulus_; }
    // Precomputed x / m for the encoder's hot loop.
    const Divider& divider() const noexcept { return divider_; }

    friend bool operator==(const CodecParams&, const CodecParams&) = default;

private:
    friend Outcome<CodecParams, UnsupportedModulus> derive_params(std::uint64_t m);

    CodecParams(std::uint64_t m, unsigned k, std::uint64_t lower, std::uint64_t threshold)
        : modulus_(m), prefix_width_(k), lower_bound_(lower), threshold_(threshold), divider_(m) {}

    std::uint64_t modulus_;
    unsigned prefix_width_;
    std::uint64_t lower_bound_;
    std::uint64_t threshold_;
    Divider divider_;
};

bool is_supported(std::uint64_t m) noexcept;

Outcome<CodecParams, UnsupportedModulus> derive_params(std::uint64_t m);

// Least k with m^k >= 2^64, using exact integer arithmetic. Requires m >= 2.
unsigned prefix_width(std::uint64_t m);

struct CostReport {
    double payload_rate;  // asymptotic payload digits per input byte, log_m 256
    unsigned header_digits;  // 2k
};

Outcome<CostReport, UnsupportedModulus> cost_report(std::uint64_t m);

}  // namespace bml
