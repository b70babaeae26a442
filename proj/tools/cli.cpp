#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bml/example.hpp"
#include "bml/formats.hpp"
#include "bml/oracle.hpp"
#include "bml/params.hpp"
#include "bml/stream.hpp"
#include "bml/textcodec.hpp"

namespace bml::cli {

int exit_code_for(DecodeErrorKind kind) noexcept {
    switch (kind) {
        case DecodeErrorKind::DigitOutOfRange: return kDigitOutOfRange;
        case DecodeErrorKind::TruncatedLengthPrefix:
        case DecodeErrorKind::TruncatedStatePrefix:
        case DecodeErrorKind::PayloadExhausted: return kTruncated;
        case DecodeErrorKind::LengthCapExceeded: return kCapExceeded;
        case DecodeErrorKind::StateOutOfWindow: return kStateOutOfWindow;
        case DecodeErrorKind::LengthOverflow:
        case DecodeErrorKind::ValueOverflow: return kOverflow;
    }
    return kIoError;
}

namespace {

struct CodecOptions {
    std::optional<std::uint64_t> modulus;
    std::string format = "dec";
    std::string in_path;
    std::string out_path;
    std::uint64_t max_decoded_len = kDefaultDecodeCap;
    std::string codec = "native";
    bool text = false;
    bool force = false;
};

std::optional<std::string> read_input(const CodecOptions& opt, Streams& io) {
    std::istream* src = &io.in;
    std::ifstream file;
    if (!opt.in_path.empty() && opt.in_path != "-") {
        file.open(opt.in_path, std::ios::binary);
        if (!file) {
            io.err << "error: cannot open " << opt.in_path << '\n';
            return std::nullopt;
        }
        src = &file;
    }
    std::string data{std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>()};
    if (src->bad()) {
        io.err << "error: failed reading input\n";
        return std::nullopt;
    }
    return data;
}

bool write_output(const CodecOptions& opt, Streams& io, std::string_view data) {
    if (!opt.out_path.empty() && opt.out_path != "-") {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        file.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!file) {
            io.err << "error: cannot write " << opt.out_path << '\n';
            return false;
        }
        return true;
    }
    io.out.write(data.data(), static_cast<std::streamsize>(data.size()));
    io.out.flush();
    return static_cast<bool>(io.out);
}

int report(Streams& io, const DecodeError& e) {
    io.err << "error: " << e.message() << '\n';
    return exit_code_for(e.kind);
}

int cmd_params(std::uint64_t m, Streams& io) {
    io.out << "m: " << m << '\n';
    auto params = derive_params(m);
    if (!params) {
        io.out << "supported: no\n";
        io.err << "error: " << params.error().message() << '\n';
        return kUsage;
    }
    const auto cost = cost_report(m).value();
    io.out << "supported: yes\n"
           << "k: " << params->prefix_width() << '\n'
           << "header digits (2k): " << cost.header_digits << '\n'
           << "L: " << params->lower_bound() << '\n'
           << "T: " << params->threshold() << '\n'
           << "payload rate (log_m 256): " << std::fixed << std::setprecision(4) << cost.payload_rate
           << std::defaultfloat << '\n';
    return kOk;
}

int cmd_encode(const CodecOptions& opt, Streams& io) {
    const auto format = parse_format(opt.format).value();
    if (format == StreamFormat::Bin && opt.out_path.empty() && io.out_is_terminal && !opt.force) {
        io.err << "error: refusing to write binary output to a terminal (use --out or --force)\n";
        return kUsage;
    }
    const std::uint64_t m = *opt.modulus;
    auto params = derive_params(m);
    if (!params) {
        io.err << "error: " << params.error().message() << '\n';
        return kUsage;
    }
    auto input = read_input(opt, io);
    if (!input) {
        return kIoError;
    }
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(input->data()), input->size());
    if (opt.text) {
        if (auto bad = find_invalid_utf8(bytes)) {
            io.err << "error: input is not valid UTF-8 at byte " << *bad << '\n';
            return kInvalidUtf8;
        }
    }

    ResidueStream stream;
    if (opt.codec == "oracle") {
        auto oparams = oracle_params(m);
        if (!oparams) {
            io.err << "error: oracle codec: " << oparams.error().message() << " (oracle needs m <= 256)\n";
            return kUsage;
        }
        stream = oracle_encode(bytes, *oparams);
    } else {
        stream = encode(bytes, *params);
    }
    return write_output(opt, io, serialize(stream, format)) ? kOk : kIoError;
}

int cmd_decode(const CodecOptions& opt, Streams& io) {
    const auto format = parse_format(opt.format).value();
    auto input = read_input(opt, io);
    if (!input) {
        return kIoError;
    }
    auto stream = deserialize(*input, format, opt.modulus);
    if (!stream) {
        const auto& e = stream.error();
        io.err << "error: " << e.detail << '\n';
        switch (e.kind) {
            case FormatError::Kind::DigitOutOfRange: return kDigitOutOfRange;
            case FormatError::Kind::MissingModulus:
            case FormatError::Kind::ModulusMismatch: return kUsage;
            case FormatError::Kind::Malformed: return kIoError;
        }
    }
    const std::uint64_t m = stream->modulus;
    auto params = derive_params(m);
    if (!params) {
        io.err << "error: " << params.error().message() << '\n';
        return kUsage;
    }

    Outcome<std::vector<std::uint8_t>, DecodeError> bytes = std::vector<std::uint8_t>{};
    if (opt.codec == "oracle") {
        auto oparams = oracle_params(m);
        if (!oparams) {
            io.err << "error: oracle codec: " << oparams.error().message() << " (oracle needs m <= 256)\n";
            return kUsage;
        }
        bytes = oracle_decode(stream->digits, *oparams, opt.max_decoded_len);
    } else {
        bytes = decode(stream->digits, *params, opt.max_decoded_len);
    }
    if (!bytes) {
        return report(io, bytes.error());
    }
    if (opt.text) {
        if (auto bad = find_invalid_utf8(*bytes)) {
            io.err << "error: decoded bytes are not valid UTF-8 at byte " << *bad << '\n';
            return kInvalidUtf8;
        }
    }
    const std::string_view out(reinterpret_cast<const char*>(bytes->data()), bytes->size());
    return write_output(opt, io, out) ? kOk : kIoError;
}

void add_codec_options(CLI::App* sub, CodecOptions& opt, bool decoding) {
    auto* mod = sub->add_option("-m,--modulus", opt.modulus, "Residue modulus m");
    if (!decoding) {
        mod->required();
    }
    sub->add_option("-f,--format", opt.format, "Stream file format")
        ->check(CLI::IsMember({"dec", "json", "bin"}))
        ->capture_default_str();
    sub->add_option("-i,--in", opt.in_path, "Input path (default: stdin)");
    sub->add_option("-o,--out", opt.out_path, "Output path (default: stdout)");
    sub->add_option("--codec", opt.codec, "native or oracle (big-integer baseline, m <= 256)")
        ->check(CLI::IsMember({"native", "oracle"}))
        ->capture_default_str();
    sub->add_flag("-t,--text", opt.text, "Treat the message as UTF-8 text");
    if (decoding) {
        sub->add_option("--max-decoded-len", opt.max_decoded_len, "Reject streams declaring more bytes")
            ->capture_default_str();
    } else {
        sub->add_flag("--force", opt.force, "Allow binary output to a terminal");
    }
}

}  // namespace

int run(int argc, const char* const* argv, Streams io) {
    CLI::App app{"Base-m-len residue codec: bytes <-> self-delimiting base-m digit streams"};
    app.name("bml");
    app.require_subcommand(1);

    std::uint64_t params_m = 0;
    auto* params_cmd = app.add_subcommand("params", "Show derived parameters for a modulus");
    params_cmd->add_option("-m,--modulus", params_m, "Residue modulus m")->required();

    CodecOptions enc_opt;
    auto* encode_cmd = app.add_subcommand("encode", "Encode bytes (or UTF-8 text) into a residue stream");
    add_codec_options(encode_cmd, enc_opt, false);

    CodecOptions dec_opt;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a residue stream back into bytes");
    add_codec_options(decode_cmd, dec_opt, true);

    auto* example_cmd = app.add_subcommand("example", "Self-test against the \"Hi\" m=50 vector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? kOk : kUsage;
    }

    if (*params_cmd) return cmd_params(params_m, io);
    if (*encode_cmd) return cmd_encode(enc_opt, io);
    if (*decode_cmd) return cmd_decode(dec_opt, io);
    if (*example_cmd) return run_example(io.out) ? kOk : kExampleFailed;
    return kUsage;
}

}  // namespace bml::cli
