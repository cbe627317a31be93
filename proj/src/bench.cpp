#include "comrade/bench.hpp"

#include <chrono>

#include "comrade/errors.hpp"
#include "comrade/inverse.hpp"
#include "comrade/norms.hpp"
#include "comrade/oracle.hpp"

namespace comrade::bench {

Family parse_family(std::string_view text) {
    if (text == "example33") {
        return Family::example33;
    }
    if (text == "random") {
        return Family::random;
    }
    throw ParseError("unknown family \"" + std::string(text) + "\" (expected example33 or random)");
}

std::string_view to_string(Family family) {
    return family == Family::example33 ? "example33" : "random";
}

ComradeMatrix generate(Family family, int n, std::uint64_t seed, double zero_pivot_bias) {
    return family == Family::example33 ? example33(n) : random_comrade(n, seed, zero_pivot_bias);
}

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

double oracle_error(const ComradeMatrix& c, const InverseResult& result, std::ostream* log) {
    const auto start = clock::now();
    const DenseMatrix<Rational> exact = oracle::dense_invert(to_dense(c));
    if (log != nullptr) {
        *log << "oracle baseline n=" << c.order() << " wall_time_seconds=" << seconds_since(start) << '\n';
    }
    if (const auto* q = std::get_if<DenseMatrix<Rational>>(&result.inverse)) {
        return inf_norm_diff(exact, *q).to_double();
    }
    const auto approx = std::get<DenseMatrix<double>>(result.inverse);
    return inf_norm_diff(transform<Rational, double>(exact, [](const Rational& r) { return r.to_double(); }), approx);
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log) {
    std::vector<BenchRecord> records;
    for (const int n : options.sizes) {
        if (n < 3) {
            throw OrderError("benchmark sizes must be at least 3, got " + std::to_string(n));
        }
        const ComradeMatrix c = generate(options.family, n, options.seed, options.zero_pivot_bias);
        const auto start = clock::now();
        const InverseResult result = invert(c, options.mode, {options.parallel_columns});
        BenchRecord rec;
        rec.n = n;
        rec.mode = options.mode;
        rec.op_count = result.op_count;
        rec.wall_time_seconds = seconds_since(start);
        if (options.compute_epsilon) {
            if (n <= options.oracle_limit) {
                rec.epsilon = oracle_error(c, result, log);
            } else if (const auto* q = std::get_if<DenseMatrix<Rational>>(&result.inverse)) {
                rec.epsilon = residual_norm(c, transform<Rational, double>(*q, [](const Rational& r) {
                                                return r.to_double();
                                            }));
            } else {
                rec.epsilon = residual_norm(c, std::get<DenseMatrix<double>>(result.inverse));
            }
        }
        records.push_back(rec);
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << csv_header << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << comrade::to_string(r.mode) << ',' << r.op_count << ','
            << comrade::to_string(r.wall_time_seconds) << ',';
        if (r.epsilon) {
            out << comrade::to_string(*r.epsilon);
        }
        out << '\n';
    }
}

} // namespace comrade::bench
