#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comrade/commands.hpp"
#include "comrade/errors.hpp"

namespace {

comrade::cli::ModeChoice mode_choice(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return comrade::parse_mode(text);
}

} // namespace

int main(int argc, char** argv) {
    using namespace comrade;
    CLI::App app{"Determinant and inverse of general comrade matrices in O(n^2)"};
    app.require_subcommand(1);

    const std::vector<std::string> modes{"exact", "symbolic", "float"};
    std::string mode;
    std::string input;
    std::string output;

    auto* det = app.add_subcommand("det", "Print the determinant of a matrix file");
    det->add_option("file", input, "Comrade matrix JSON file")->required();
    det->add_option("--mode", mode, "exact | symbolic | float (default: exact, symbolic on zero pivot)")
        ->check(CLI::IsMember(modes));

    auto* inv = app.add_subcommand("inv", "Invert a matrix file and write the dense inverse");
    inv->add_option("file", input, "Comrade matrix JSON file")->required();
    inv->add_option("-o,--output", output, "Dense inverse JSON file")->required();
    inv->add_option("--mode", mode, "exact | symbolic | float")->check(CLI::IsMember(modes));

    auto* check = app.add_subcommand("check", "Print ||C C^-1 - I|| for a matrix file");
    check->add_option("file", input, "Comrade matrix JSON file")->required();
    check->add_option("--mode", mode, "exact | symbolic | float")->check(CLI::IsMember(modes));

    std::string family = "example33";
    int n = 0;
    std::uint64_t seed = 1;
    double bias = 0.0;
    auto* gen = app.add_subcommand("gen", "Write a generated matrix file");
    gen->add_option("--family", family, "example33 | random")->check(CLI::IsMember({"example33", "random"}));
    gen->add_option("--n", n, "Matrix order (>= 3)")->required();
    gen->add_option("--seed", seed, "Seed for the random family");
    gen->add_option("--zero-pivot-bias", bias, "Probability of forcing beta_1 = 0 and an interior alpha_j = 0")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("-o,--output", output, "Output matrix file")->required();

    std::vector<int> sizes;
    bool parallel = false;
    auto* bench = app.add_subcommand("bench", "Time and check inversion over a list of sizes; writes CSV");
    bench->add_option("--family", family, "example33 | random")->check(CLI::IsMember({"example33", "random"}));
    bench->add_option("--sizes", sizes, "Comma-separated orders, e.g. 50,100,500")->delimiter(',')->required();
    bench->add_option("--mode", mode, "exact | symbolic | float (default: float)")->check(CLI::IsMember(modes));
    bench->add_option("--seed", seed, "Seed for the random family");
    bench->add_option("--zero-pivot-bias", bias, "Zero-pivot bias for the random family")->check(CLI::Range(0.0, 1.0));
    bench->add_flag("--parallel-columns", parallel, "Compute the last two columns on two threads");
    bench->add_option("-o,--output", output, "CSV file, or - for stdout")->required();

    CLI11_PARSE(app, argc, argv);

    const cli::Streams io{std::cout, std::cerr};
    if (det->parsed()) {
        return cli::cmd_det(input, mode_choice(mode), io);
    }
    if (inv->parsed()) {
        return cli::cmd_inv(input, output, mode_choice(mode), io);
    }
    if (check->parsed()) {
        return cli::cmd_check(input, mode_choice(mode), io);
    }
    if (gen->parsed()) {
        return cli::cmd_gen(bench::parse_family(family), n, seed, bias, output, io);
    }
    bench::BenchOptions options;
    options.family = bench::parse_family(family);
    options.sizes = sizes;
    options.mode = mode.empty() ? ScalarMode::floating : parse_mode(mode);
    options.parallel_columns = parallel;
    options.seed = seed;
    options.zero_pivot_bias = bias;
    return cli::cmd_bench(options, output, io);
}
