#pragma once

#include <iosfwd>

#include "bml/errors.hpp"

namespace bml::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoError = 1,          // unreadable/unwritable file, malformed stream file
    kUsage = 2,            // bad flags, unsupported or mismatched modulus
    kDigitOutOfRange = 3,
    kTruncated = 4,        // either header or the payload
    kCapExceeded = 5,
    kStateOutOfWindow = 6,
    kInvalidUtf8 = 7,
    kOverflow = 8,         // length header (or oracle payload) >= its range
    kExampleFailed = 9,
};

int exit_code_for(DecodeErrorKind kind) noexcept;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool out_is_terminal = false;
};

int run(int argc, const char* const* argv, Streams io);

}  // namespace bml::cli
