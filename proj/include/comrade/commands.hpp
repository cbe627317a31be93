#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

#include "comrade/bench.hpp"
#include "comrade/scalar.hpp"

namespace comrade::cli {

enum ExitCode : int {
    ok = 0,
    failure = 1,
    parse_error = 2,
    singular = 3,
    zero_pivot = 4,
    pole_at_zero = 5,
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

/// No explicit mode means: exact, retried once in symbolic mode on a zero
/// pivot or zero alpha (the retry is reported on the error stream).
using ModeChoice = std::optional<ScalarMode>;

/// Prints the determinant.
int cmd_det(const std::filesystem::path& input, ModeChoice mode, Streams io);

/// Writes the inverse as a dense matrix file; prints the determinant, the
/// substitution log and the operation count.
int cmd_inv(const std::filesystem::path& input, const std::filesystem::path& output, ModeChoice mode, Streams io);

/// Prints ||C C^-1 - I|| (infinity norm); exactly "0" for exact results.
int cmd_check(const std::filesystem::path& input, ModeChoice mode, Streams io);

int cmd_gen(bench::Family family, int n, std::uint64_t seed, double zero_pivot_bias,
            const std::filesystem::path& output, Streams io);

/// Writes the CSV to output, or to io.out when output is "-".
int cmd_bench(const bench::BenchOptions& options, const std::filesystem::path& output, Streams io);

} // namespace comrade::cli
