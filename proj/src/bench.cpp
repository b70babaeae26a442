#include "bml/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bml/oracle.hpp"
#include "bml/params.hpp"
#include "bml/stream.hpp"
#include "bml/textcodec.hpp"

namespace bml::bench {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMiB = 1024.0 * 1024.0;

struct XorShift64Star {
    std::uint64_t state;

    explicit XorShift64Star(std::uint64_t seed) : state(seed ? seed : 0x2545F4914F6CDD1DULL) {}

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
};

volatile std::uint64_t g_sink = 0;

// op returns something cheap to fold into g_sink so the work is not elided.
double measure(const std::function<std::uint64_t()>& op, std::size_t bytes_per_op, const BenchConfig& cfg) {
    const auto warmup = std::chrono::duration<double>(cfg.warmup_seconds);
    std::uint64_t warm_iters = 0;
    const auto warm_start = Clock::now();
    auto elapsed = Clock::duration::zero();
    do {
        g_sink = g_sink + op();
        ++warm_iters;
        elapsed = Clock::now() - warm_start;
    } while (elapsed < warmup);
    const double per_iter = std::chrono::duration<double>(elapsed).count() / static_cast<double>(warm_iters);

    const double per_sample = cfg.measure_seconds / cfg.samples;
    const auto iters = static_cast<std::uint64_t>(std::max(1.0, per_sample / std::max(per_iter, 1e-9)));

    std::vector<double> rates;
    rates.reserve(cfg.samples);
    for (unsigned s = 0; s < cfg.samples; ++s) {
        const auto start = Clock::now();
        for (std::uint64_t i = 0; i < iters; ++i) {
            g_sink = g_sink + op();
        }
        const double secs = std::max(std::chrono::duration<double>(Clock::now() - start).count(), 1e-12);
        rates.push_back(static_cast<double>(bytes_per_op) * static_cast<double>(iters) / secs / kMiB);
    }
    std::sort(rates.begin(), rates.end());
    const std::size_t mid = rates.size() / 2;
    return rates.size() % 2 ? rates[mid] : 0.5 * (rates[mid - 1] + rates[mid]);
}

[[noreturn]] void roundtrip_failed(const char* what, std::uint64_t m, std::size_t size) {
    std::ostringstream msg;
    msg << what << " roundtrip failed for m=" << m << " size=" << size;
    throw std::runtime_error(msg.str());
}

}  // namespace

const char* to_string(Workload w) noexcept {
    switch (w) {
        case Workload::Encode: return "encode";
        case Workload::Decode: return "decode";
        case Workload::EncodeText: return "encode-text";
        case Workload::DecodeText: return "decode-text";
    }
    return "?";
}

const char* to_string(Codec c) noexcept { return c == Codec::Native ? "native" : "oracle"; }

void validate(const BenchConfig& config) {
    if (config.samples == 0) {
        throw BenchConfigError("samples must be at least 1");
    }
    if (config.warmup_seconds < 0 || config.measure_seconds <= 0) {
        throw BenchConfigError("warm-up must be >= 0 and measurement time > 0");
    }
    for (auto m : config.native_moduli) {
        if (!is_supported(m)) {
            throw BenchConfigError(UnsupportedModulus{m}.message());
        }
    }
    for (auto m : config.oracle_moduli) {
        if (m < 2 || m > kOracleMaxModulus) {
            throw BenchConfigError("oracle baseline supports moduli 2..256 only, got " + std::to_string(m));
        }
    }
    if (!config.text_sizes.empty() && !is_supported(config.text_modulus)) {
        throw BenchConfigError(UnsupportedModulus{config.text_modulus}.message());
    }
    if (config.sizes.empty() && config.text_sizes.empty()) {
        throw BenchConfigError("no input sizes configured");
    }
}

std::vector<std::uint8_t> random_bytes(std::size_t size, std::uint64_t seed) {
    XorShift64Star rng(seed);
    std::vector<std::uint8_t> out(size);
    for (std::size_t i = 0; i < size; i += 8) {
        std::uint64_t word = rng.next();
        for (std::size_t j = i; j < std::min(size, i + 8); ++j) {
            out[j] = static_cast<std::uint8_t>(word);
            word >>= 8;
        }
    }
    return out;
}

std::string mixed_utf8(std::size_t size, std::uint64_t seed) {
    XorShift64Star rng(seed);
    std::u32string scalars;
    std::size_t bytes = 0;
    while (bytes < size) {
        const std::uint64_t r = rng.next();
        char32_t c;
        std::size_t len;
        switch (r % 4) {
            case 0: c = U'a' + static_cast<char32_t>((r >> 8) % 26); len = 1; break;
            case 1: c = 0x0400 + static_cast<char32_t>((r >> 8) % 0x100); len = 2; break;  // Cyrillic
            case 2: c = 0x4E00 + static_cast<char32_t>((r >> 8) % 0x5200); len = 3; break;  // CJK
            default: c = 0x1F600 + static_cast<char32_t>((r >> 8) % 0x50); len = 4; break;  // emoji
        }
        if (bytes + len > size) {
            c = U' ';
            len = 1;
        }
        scalars.push_back(c);
        bytes += len;
    }
    return TextPayload::from_scalars(scalars).value().utf8();
}

std::vector<BenchRecord> run_suite(const BenchConfig& config) {
    validate(config);
    std::vector<BenchRecord> records;

    for (auto m : config.native_moduli) {
        const auto params = derive_params(m).value();
        for (auto size : config.sizes) {
            const auto input = random_bytes(size, config.seed ^ size);
            const auto encoded = encode(input, params);
            auto check = decode(encoded.digits, params);
            if (!check || *check != input) {
                roundtrip_failed("native", m, size);
            }
            const double enc = measure([&] { return encode(input, params).digits.size(); }, size, config);
            const double dec = measure([&] { return decode(encoded.digits, params)->size(); }, size, config);
            records.push_back({Workload::Encode, Codec::Native, m, size, enc, config.samples, config.seed});
            records.push_back({Workload::Decode, Codec::Native, m, size, dec, config.samples, config.seed});
        }
    }

    for (auto m : config.oracle_moduli) {
        const auto params = oracle_params(m).value();
        for (auto size : config.sizes) {
            const auto input = random_bytes(size, config.seed ^ size);
            const auto encoded = oracle_encode(input, params);
            auto check = oracle_decode(encoded.digits, params);
            if (!check || *check != input) {
                roundtrip_failed("oracle", m, size);
            }
            const double enc = measure([&] { return oracle_encode(input, params).digits.size(); }, size, config);
            const double dec = measure([&] { return oracle_decode(encoded.digits, params)->size(); }, size, config);
            records.push_back({Workload::Encode, Codec::Oracle, m, size, enc, config.samples, config.seed});
            records.push_back({Workload::Decode, Codec::Oracle, m, size, dec, config.samples, config.seed});
        }
    }

    if (!config.text_sizes.empty()) {
        const auto params = derive_params(config.text_modulus).value();
        for (auto size : config.text_sizes) {
            const auto text = TextPayload::from_utf8(mixed_utf8(size, config.seed ^ size)).value();
            const auto encoded = encode_text(text, params);
            auto check = decode_text(encoded.digits, params);
            if (!check || *check != text) {
                roundtrip_failed("text", config.text_modulus, size);
            }
            const double enc = measure([&] { return encode_text(text, params).digits.size(); }, size, config);
            const double dec =
                measure([&] { return decode_text(encoded.digits, params)->utf8().size(); }, size, config);
            records.push_back(
                {Workload::EncodeText, Codec::Native, config.text_modulus, size, enc, config.samples, config.seed});
            records.push_back(
                {Workload::DecodeText, Codec::Native, config.text_modulus, size, dec, config.samples, config.seed});
        }
    }
    return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "workload,codec,m,size_bytes,mib_per_s,samples,seed\n";
    for (const auto& r : records) {
        out << to_string(r.workload) << ',' << to_string(r.codec) << ',' << r.modulus << ',' << r.size_bytes << ','
            << std::fixed << std::setprecision(3) << r.mib_per_s << std::defaultfloat << ',' << r.samples << ','
            << r.seed << '\n';
    }
}

namespace {

std::string size_label(std::size_t size) {
    if (size >= 1024 && size % 1024 == 0) {
        return std::to_string(size / 1024) + " KiB";
    }
    return std::to_string(size) + " B";
}

}  // namespace

void write_markdown(std::ostream& out, const std::vector<BenchRecord>& records) {
    // Columns are (codec, m) pairs and rows (workload, size), both in first
    // appearance order.
    std::vector<std::pair<Codec, std::uint64_t>> columns;
    std::vector<std::pair<Workload, std::size_t>> rows;
    std::map<std::tuple<int, std::size_t, int, std::uint64_t>, double> cells;
    for (const auto& r : records) {
        const std::pair col{r.codec, r.modulus};
        const std::pair row{r.workload, r.size_bytes};
        if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
        cells[{static_cast<int>(r.workload), r.size_bytes, static_cast<int>(r.codec), r.modulus}] = r.mib_per_s;
    }

    out << "| Workload |";
    for (const auto& [codec, m] : columns) {
        out << ' ' << (codec == Codec::Native ? "Native" : "Oracle") << " m=" << m << " |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < columns.size(); ++i) out << "---:|";
    out << '\n';
    for (const auto& [workload, size] : rows) {
        out << "| " << to_string(workload) << ' ' << size_label(size) << " |";
        for (const auto& [codec, m] : columns) {
            auto it = cells.find({static_cast<int>(workload), size, static_cast<int>(codec), m});
            if (it == cells.end()) {
                out << "  |";
            } else {
                out << ' ' << std::fixed << std::setprecision(3) << it->second << std::defaultfloat << " |";
            }
        }
        out << '\n';
    }
    if (!records.empty()) {
        out << "\nThroughput in MiB/s of plaintext, median of " << records.front().samples
            << " samples; uniform random bytes from seed " << records.front().seed << ".\n";
    }
}

}  // namespace bml::bench
