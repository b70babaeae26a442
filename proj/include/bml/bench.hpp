#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bml::bench {

enum class Workload { Encode, Decode, EncodeText, DecodeText };
enum class Codec { Native, Oracle };

const char* to_string(Workload w) noexcept;
const char* to_string(Codec c) noexcept;

struct BenchRecord {
    Workload workload;
    Codec codec;
    std::uint64_t modulus;
    std::size_t size_bytes;
    double mib_per_s;  // median over samples
    unsigned samples;
    std::uint64_t seed;
};

// Defaults follow the reference methodology: six moduli, three sizes,
// 10 samples, 0.1 s warm-up, 0.2 s measurement per cell.
struct BenchConfig {
    std::vector<std::uint64_t> native_moduli = {2, 3, 13, 65, 251, 257};
    std::vector<std::uint64_t> oracle_moduli = {2, 3, 13, 65, 251};
    std::vector<std::size_t> sizes = {32, 1024, 65536};
    std::uint64_t text_modulus = 65;
    std::vector<std::size_t> text_sizes = {1024, 65536};
    unsigned samples = 10;
    double warmup_seconds = 0.1;
    double measure_seconds = 0.2;
    std::uint64_t seed = 0x9E3779B97F4A7C15ULL;
};

class BenchConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws BenchConfigError for unusable configurations (unsupported moduli,
// oracle above m = 256, zero samples, empty size lists, ...).
void validate(const BenchConfig& config);

// Fixed-seed xorshift64* byte stream.
std::vector<std::uint8_t> random_bytes(std::size_t size, std::uint64_t seed);

// Valid UTF-8 of exactly `size` bytes mixing 1- to 4-byte sequences.
std::string mixed_utf8(std::size_t size, std::uint64_t seed);

// Runs every cell sequentially. Each cell's roundtrip is checked once before
// timing; a failed check throws std::runtime_error.
std::vector<BenchRecord> run_suite(const BenchConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_markdown(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace bml::bench
