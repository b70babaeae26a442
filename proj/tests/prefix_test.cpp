#include "bml/prefix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"

using namespace bml;

namespace {

const CodecParams& p50() {
    static const CodecParams p = derive_params(50).value();
    return p;
}

}  // namespace

TEST(EncodePrefix, LengthTwoAtFifty) {
    EXPECT_EQ(encode_prefix(2, p50()), (std::vector<Digit>{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(EncodePrefix, ZeroIsAllZeros) {
    for (std::uint64_t m : std::initializer_list<std::uint64_t>{2ULL, 3ULL, 50ULL, 257ULL, kMaxModulus}) {
        const auto p = derive_params(m).value();
        EXPECT_EQ(encode_prefix(0, p), std::vector<Digit>(p.prefix_width(), 0));
    }
}

TEST(EncodePrefix, MaxValueBinaryIsAllOnes) {
    const auto p = derive_params(2).value();
    EXPECT_EQ(encode_prefix(UINT64_MAX, p), std::vector<Digit>(64, 1));
}

TEST(DecodePrefix, Examples) {
    EXPECT_EQ(*decode_prefix(std::vector<Digit>{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, p50()), 2u);
    const std::vector<Digit> state{12, 8, 11, 36, 6, 32, 19, 0, 38, 1, 49, 1};
    EXPECT_EQ(static_cast<std::uint64_t>(reftest::ref_eval_le(state, 50)), 9671406556917027912ULL);
    EXPECT_EQ(*decode_prefix(state, p50()), 9671406556917027912ULL);
}

TEST(DecodePrefix, Truncated) {
    auto r = decode_prefix(std::vector<Digit>{}, p50());
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error(), PrefixError::TruncatedPrefix);
    r = decode_prefix(std::vector<Digit>(11, 0), p50());
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error(), PrefixError::TruncatedPrefix);
}

TEST(DecodePrefix, ValuesAtOrAbove2To64Overflow) {
    // 3^41 > 2^64, so 41 digits of 2 encode 3^41 - 1 >= 2^64.
    const auto p3 = derive_params(3).value();
    ASSERT_EQ(p3.prefix_width(), 41u);
    auto r = decode_prefix(std::vector<Digit>(41, 2), p3);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error(), PrefixError::ValueOverflow);

    // Exactly 2^64 at m = 50.
    const auto digits = reftest::ref_prefix(reftest::kTwo64, 50, 12);
    r = decode_prefix(digits, p50());
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error(), PrefixError::ValueOverflow);

    // 2^64 - 1 is fine.
    const auto max_digits = reftest::ref_prefix(reftest::kTwo64 - 1, 50, 12);
    EXPECT_EQ(*decode_prefix(max_digits, p50()), UINT64_MAX);
}

TEST(PrefixProperty, RoundtripWidthAndSuffixIndependence) {
    std::mt19937_64 rng(0x5EED0002);
    std::vector<std::uint64_t> moduli = {2, 3, 7, 10, 50, 255, 256, 257, 1000, 65537, kMaxModulus};
    for (int i = 0; i < 20; ++i) moduli.push_back(2 + rng() % (kMaxModulus - 1));

    std::vector<std::uint64_t> values = {0, 1, 255, 256, std::uint64_t{1} << 32, UINT64_MAX};
    for (int i = 0; i < 100000; ++i) values.push_back(rng() >> (rng() % 64));

    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::uint64_t x = values[i];
        const auto m = i < 6 ? moduli[rng() % moduli.size()] : moduli[i % moduli.size()];
        const auto p = derive_params(m).value();
        auto digits = encode_prefix(x, p);
        ASSERT_EQ(digits.size(), p.prefix_width());
        for (auto d : digits) ASSERT_LT(d, m);
        ASSERT_EQ(digits, reftest::ref_prefix(x, m, p.prefix_width()));
        ASSERT_EQ(*decode_prefix(digits, p), x);

        const auto tail = reftest::random_digits(rng, rng() % 8, m);
        digits.insert(digits.end(), tail.begin(), tail.end());
        ASSERT_EQ(*decode_prefix(digits, p), x) << "x=" << x << " m=" << m;
    }
    for (std::uint64_t m = 2; m <= 4096; ++m) {
        const auto p = derive_params(m).value();
        for (std::size_t i = 0; i < 6; ++i) {
            ASSERT_EQ(*decode_prefix(encode_prefix(values[i], p), p), values[i]);
        }
    }
}
