#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "bml/params.hpp"

namespace bml {

// "Hi" = [72, 105] at m = 50: length header, state header, two payload digits.
inline constexpr std::array<std::uint8_t, 2> kExampleBytes = {72, 105};
inline constexpr std::uint64_t kExampleModulus = 50;
inline constexpr std::array<Digit, 26> kExampleStream = {
    2,  0, 0,  0,  0, 0,  0,  0, 0,  0, 0,  0,   // len = 2
    12, 8, 11, 36, 6, 32, 19, 0, 38, 1, 49, 1,   // state
    1,  48,                                      // payload
};

// Encodes the example, compares digit for digit against expected, decodes it
// back, and prints a report ending in PASS or FAIL. Returns true on PASS.
bool run_example(std::ostream& out, std::span<const Digit> expected = kExampleStream);

}  // namespace bml
