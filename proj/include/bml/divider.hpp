#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace bml {

// Unsigned 64-bit division by a runtime-constant divisor via a precomputed
// multiply-high reciprocal (Granlund-Montgomery round-up method). quotient(n)
// equals n / d for every 64-bit n.
class Divider {
public:
    explicit Divider(std::uint64_t d) : divisor_(d) {
        assert(d >= 1);
        const unsigned log2d = 63u - static_cast<unsigned>(std::countl_zero(d));
        if (std::has_single_bit(d)) {
            magic_ = 0;
            shift_ = log2d;
            add_ = false;
            return;
        }
        // floor(2^(64 + log2d) / d); fits in 64 bits because d > 2^log2d.
        const u128 numerator = u128{1} << (64 + log2d);
        std::uint64_t proposed = static_cast<std::uint64_t>(numerator / d);
        const std::uint64_t rem = static_cast<std::uint64_t>(numerator % d);
        const std::uint64_t e = d - rem;
        if (e < (std::uint64_t{1} << log2d)) {
            shift_ = log2d;
            add_ = false;
        } else {
            proposed += proposed;
            const std::uint64_t twice_rem = rem + rem;
            if (twice_rem >= d || twice_rem < rem) {
                proposed += 1;
            }
            shift_ = log2d;
            add_ = true;
        }
        magic_ = proposed + 1;
    }

    std::uint64_t divisor() const noexcept { return divisor_; }

    std::uint64_t quotient(std::uint64_t n) const noexcept {
        if (magic_ == 0) {
            return n >> shift_;
        }
        const auto q = static_cast<std::uint64_t>((u128{magic_} * n) >> 64);
        if (!add_) {
            return q >> shift_;
        }
        return (((n - q) >> 1) + q) >> shift_;
    }

    friend bool operator==(const Divider& a, const Divider& b) noexcept { return a.divisor_ == b.divisor_; }

private:
    __extension__ typedef unsigned __int128 u128;

    std::uint64_t divisor_;
    std::uint64_t magic_ = 0;
    unsigned shift_ = 0;
    bool add_ = false;
};

}  // namespace bml
