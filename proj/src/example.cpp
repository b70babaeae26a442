#include "bml/example.hpp"

#include <algorithm>
#include <ostream>

#include "bml/stream.hpp"

namespace bml {

namespace {

void print_digits(std::ostream& out, std::span<const Digit> digits) {
    out << '[';
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out << (i ? ", " : "") << digits[i];
    }
    out << ']';
}

}  // namespace

bool run_example(std::ostream& out, std::span<const Digit> expected) {
    const auto params = derive_params(kExampleModulus).value();
    const auto encoded = encode(kExampleBytes, params);

    out << "input   : [72, 105] (\"Hi\"), m = " << kExampleModulus << ", k = " << params.prefix_width() << '\n';
    out << "encoded : ";
    print_digits(out, encoded.digits);
    out << '\n';

    bool pass = std::ranges::equal(encoded.digits, expected);
    if (!pass) {
        out << "expected: ";
        print_digits(out, expected);
        out << '\n';
    }

    const auto decoded = decode(expected, params);
    if (decoded) {
        out << "decoded : [";
        for (std::size_t i = 0; i < decoded->size(); ++i) {
            out << (i ? ", " : "") << unsigned{(*decoded)[i]};
        }
        out << "]\n";
        pass = pass && std::ranges::equal(*decoded, kExampleBytes);
    } else {
        out << "decoded : error " << decoded.error().message() << '\n';
        pass = false;
    }

    out << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

}  // namespace bml
