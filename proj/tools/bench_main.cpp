#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bml/bench.hpp"

int main(int argc, char** argv) {
    bml::bench::BenchConfig config;
    std::string csv_path;
    bool no_oracle = false;
    bool no_text = false;

    CLI::App app{"Throughput benchmark: streaming codec vs big-integer baseline"};
    app.add_option("--moduli", config.native_moduli, "Moduli for the streaming codec")->delimiter(',')->capture_default_str();
    app.add_option("--oracle-moduli", config.oracle_moduli, "Moduli for the baseline (<= 256)")->delimiter(',')
        ->capture_default_str();
    app.add_option("--sizes", config.sizes, "Input sizes in bytes")->delimiter(',')->capture_default_str();
    app.add_option("--text-modulus", config.text_modulus, "Modulus for the UTF-8 workloads")->capture_default_str();
    app.add_option("--text-sizes", config.text_sizes, "UTF-8 input sizes in bytes")->delimiter(',')->capture_default_str();
    app.add_option("--samples", config.samples, "Samples per cell")->capture_default_str();
    app.add_option("--warmup", config.warmup_seconds, "Warm-up seconds per cell")->capture_default_str();
    app.add_option("--measure", config.measure_seconds, "Measurement seconds per cell")->capture_default_str();
    app.add_option("--seed", config.seed, "Input generator seed")->capture_default_str();
    app.add_option("--csv", csv_path, "Also write CSV records to this path");
    app.add_flag("--no-oracle", no_oracle, "Skip the baseline");
    app.add_flag("--no-text", no_text, "Skip the UTF-8 workloads");
    CLI11_PARSE(app, argc, argv);

    if (no_oracle) config.oracle_moduli.clear();
    if (no_text) config.text_sizes.clear();

    try {
        const auto records = bml::bench::run_suite(config);
        bml::bench::write_markdown(std::cout, records);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            bml::bench::write_csv(csv, records);
            if (!csv) {
                std::cerr << "error: cannot write " << csv_path << '\n';
                return 1;
            }
        }
    } catch (const bml::bench::BenchConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
