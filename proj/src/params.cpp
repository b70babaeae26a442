#include "bml/params.hpp"

#include <cmath>

namespace bml {

bool is_supported(std::uint64_t m) noexcept { return m >= 2 && m <= kMaxModulus; }

unsigned prefix_width(std::uint64_t m) {
    // power tracks m^k while it is still below 2^64; the first overflow means
    // m^k >= 2^64.
    unsigned k = 0;
    std::uint64_t power = 1;
    for (;;) {
        ++k;
        std::uint64_t next;
        if (__builtin_mul_overflow(power, m, &next)) {
            return k;
        }
        power = next;
    }
}

Outcome<CodecParams, UnsupportedModulus> derive_params(std::uint64_t m) {
    if (!is_supported(m)) {
        return UnsupportedModulus{m};
    }
    const std::uint64_t lower = 256 * (UINT64_MAX / (256 * m));
    const std::uint64_t threshold = (lower / 256) * m;
    return CodecParams(m, prefix_width(m), lower, threshold);
}

Outcome<CostReport, UnsupportedModulus> cost_report(std::uint64_t m) {
    auto params = derive_params(m);
    if (!params) {
        return params.error();
    }
    const double rate = std::log(256.0) / std::log(static_cast<double>(m));
    return CostReport{rate, 2 * params->prefix_width()};
}

}  // namespace bml
