#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "comrade/comrade_matrix.hpp"
#include "comrade/scalar.hpp"

namespace comrade::bench {

enum class Family { example33, random };

Family parse_family(std::string_view text);
std::string_view to_string(Family family);

ComradeMatrix generate(Family family, int n, std::uint64_t seed = 1, double zero_pivot_bias = 0.0);

/// One row of the benchmark CSV.
struct BenchRecord {
    int n = 0;
    ScalarMode mode = ScalarMode::floating;
    std::uint64_t op_count = 0;
    double wall_time_seconds = 0.0;
    /// ||exact inverse - computed inverse|| for n <= oracle_limit, otherwise
    /// the residual ||C X - I||; empty when neither was computed.
    std::optional<double> epsilon;
};

struct BenchOptions {
    Family family = Family::example33;
    std::vector<int> sizes;
    ScalarMode mode = ScalarMode::floating;
    bool parallel_columns = false;
    std::uint64_t seed = 1;
    double zero_pivot_bias = 0.0;
    /// Largest n checked against the O(n^3) exact oracle.
    int oracle_limit = 200;
    bool compute_epsilon = true;
};

/// Runs invert once per size. When log is set, also reports the oracle's
/// own wall time as a baseline for every size it checks.
std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log = nullptr);

inline constexpr std::string_view csv_header = "n,mode,op_count,wall_time_seconds,epsilon";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

} // namespace comrade::bench
