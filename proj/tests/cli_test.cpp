#include "cli.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bml/formats.hpp"
#include "bml/params.hpp"
#include "bml/prefix.hpp"

using namespace bml;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}, bool terminal = false) {
    args.insert(args.begin(), "bml");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), {in, out, err, terminal});
    return {code, out.str(), err.str()};
}

const std::string kHiDec = "2 0 0 0 0 0 0 0 0 0 0 0 12 8 11 36 6 32 19 0 38 1 49 1 1 48\n";

}  // namespace

TEST(Cli, EncodeHi) {
    const auto r = run({"encode", "--modulus", "50", "--format", "dec"}, "Hi");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, kHiDec);
}

TEST(Cli, DecodeHi) {
    const auto r = run({"decode", "--modulus", "50", "--format", "dec"}, kHiDec);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "Hi");
}

TEST(Cli, DecodeCap) {
    const auto r = run({"decode", "-m", "50", "--max-decoded-len", "1"}, kHiDec);
    EXPECT_EQ(r.code, cli::kCapExceeded);
    EXPECT_NE(r.err.find("LengthCapExceeded"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DefaultCapApplies) {
    const auto p = derive_params(50).value();
    auto digits = encode_prefix(kDefaultDecodeCap + 1, p);
    const auto r = run({"decode", "-m", "50"}, serialize({50, digits}, StreamFormat::Dec));
    EXPECT_EQ(r.code, cli::kCapExceeded);
}

TEST(Cli, Params) {
    auto r = run({"params", "--modulus", "50"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("k: 12\n"), std::string::npos);
    EXPECT_NE(r.out.find("header digits (2k): 24\n"), std::string::npos);
    EXPECT_NE(r.out.find("L: 368934881474190848\n"), std::string::npos);
    EXPECT_NE(r.out.find("T: 72057594037927900\n"), std::string::npos);
    EXPECT_NE(r.out.find("payload rate (log_m 256): 1.4175\n"), std::string::npos);

    r = run({"params", "--modulus", "257"});
    EXPECT_NE(r.out.find("header digits (2k): 16\n"), std::string::npos);
    EXPECT_NE(r.out.find("payload rate (log_m 256): 0.9993\n"), std::string::npos);

    r = run({"params", "--modulus", "1"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.out.find("supported: no"), std::string::npos);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Example) {
    auto r = run({"example"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(run({"example"}).out, r.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"encode"}, "x").code, cli::kUsage);                      // missing modulus
    EXPECT_EQ(run({"encode", "-m", "50", "-f", "xml"}, "x").code, cli::kUsage);
    EXPECT_EQ(run({"encode", "-m", "1"}, "x").code, cli::kUsage);
    EXPECT_EQ(run({"decode"}, kHiDec).code, cli::kUsage);                   // dec needs -m
    EXPECT_EQ(run({"decode", "-m", "51", "-f", "json"}, "{\"m\":50,\"digits\":[]}").code, cli::kUsage);
    EXPECT_EQ(run({"encode", "-m", "257", "--codec", "oracle"}, "x").code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DecodeErrorExitCodes) {
    EXPECT_EQ(run({"decode", "-m", "50"}, "2 0 0 50").code, cli::kDigitOutOfRange);
    EXPECT_EQ(run({"decode", "-m", "50"}, "2 0 0").code, cli::kTruncated);
    EXPECT_EQ(run({"decode", "-m", "50"}, kHiDec.substr(0, kHiDec.size() - 4)).code, cli::kTruncated);
    std::string zero_state = "2 0 0 0 0 0 0 0 0 0 0 0";
    for (int i = 0; i < 12; ++i) zero_state += " 0";
    EXPECT_EQ(run({"decode", "-m", "50"}, zero_state).code, cli::kStateOutOfWindow);
    const std::string all_twos = [] {
        std::string s;
        for (int i = 0; i < 82; ++i) s += "2 ";
        return s;
    }();
    EXPECT_EQ(run({"decode", "-m", "3"}, all_twos).code, cli::kOverflow);
    EXPECT_EQ(run({"decode", "-m", "50", "-f", "bin"}, "nope").code, cli::kIoError);
    EXPECT_EQ(run({"decode", "-m", "50", "-i", "/nonexistent/file"}).code, cli::kIoError);
}

TEST(Cli, TextMode) {
    EXPECT_EQ(run({"encode", "-m", "50", "--text"}, "Hi").out, kHiDec);
    EXPECT_EQ(run({"encode", "-m", "50", "--text"}, "\xFF").code, cli::kInvalidUtf8);
    const auto enc = run({"encode", "-m", "65"}, "\xC3");
    EXPECT_EQ(run({"decode", "-m", "65"}, enc.out).code, 0);
    EXPECT_EQ(run({"decode", "-m", "65", "--text"}, enc.out).code, cli::kInvalidUtf8);
}

TEST(Cli, BinaryRefusesTerminal) {
    EXPECT_EQ(run({"encode", "-m", "50", "-f", "bin"}, "Hi", true).code, cli::kUsage);
    EXPECT_EQ(run({"encode", "-m", "50", "-f", "bin", "--force"}, "Hi", true).code, 0);
    EXPECT_EQ(run({"encode", "-m", "50", "-f", "bin"}, "Hi", false).code, 0);
}

TEST(Cli, PipedRoundtripAllFormats) {
    std::mt19937_64 rng(0x5EED000B);
    const std::vector<std::size_t> sizes = {0, 1, 777, 65536, 1 << 20};
    for (const char* format : {"dec", "json", "bin"}) {
        for (const char* m : {"2", "65", "257", "65537"}) {
            for (auto size : sizes) {
                if (size == (1u << 20) && std::string(m) != "65") continue;
                std::string input(size, '\0');
                for (auto& c : input) c = static_cast<char>(rng());
                const auto enc = run({"encode", "-m", m, "-f", format}, input);
                ASSERT_EQ(enc.code, 0) << enc.err;
                const auto dec = run({"decode", "-m", m, "-f", format}, enc.out);
                ASSERT_EQ(dec.code, 0) << dec.err;
                ASSERT_EQ(dec.out, input) << format << " m=" << m << " size=" << size;
            }
        }
    }
}

TEST(Cli, OracleCodec) {
    const auto enc = run({"encode", "-m", "13", "--codec", "oracle", "-f", "json"}, "differential");
    ASSERT_EQ(enc.code, 0) << enc.err;
    const auto dec = run({"decode", "--codec", "oracle", "-f", "json"}, enc.out);
    EXPECT_EQ(dec.code, 0) << dec.err;
    EXPECT_EQ(dec.out, "differential");
}
