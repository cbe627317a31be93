#include "comrade/commands.hpp"

#include <fstream>

#include "comrade/errors.hpp"
#include "comrade/inverse.hpp"
#include "comrade/io.hpp"
#include "comrade/lu.hpp"
#include "comrade/norms.hpp"

namespace comrade::cli {

namespace {

template <class Fn>
int guarded(Streams io, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const OrderError& e) {
        io.err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const ShapeError& e) {
        io.err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const SingularMatrixError& e) {
        io.err << "error: " << e.what() << '\n';
        return singular;
    } catch (const ZeroPivotError& e) {
        io.err << "error: " << e.what() << '\n';
        return zero_pivot;
    } catch (const PoleAtZeroError& e) {
        io.err << "error: " << e.what() << '\n';
        return pole_at_zero;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return failure;
    }
}

template <class Fn>
auto with_retry(ModeChoice choice, Streams io, Fn&& fn) {
    if (choice) {
        return fn(*choice);
    }
    try {
        return fn(ScalarMode::exact);
    } catch (const ZeroPivotError& e) {
        io.err << "note: zero " << (e.kind() == SubstitutionKind::pivot ? "pivot" : "alpha") << " at index "
               << e.index() << " in exact mode; retrying in symbolic mode\n";
        return fn(ScalarMode::symbolic);
    }
}

DenseMatrix<Rational> as_rational(const InverseResult& r) {
    if (const auto* q = std::get_if<DenseMatrix<Rational>>(&r.inverse)) {
        return *q;
    }
    return transform<double, Rational>(std::get<DenseMatrix<double>>(r.inverse),
                                       [](double v) { return Rational::from_double(v); });
}

} // namespace

int cmd_det(const std::filesystem::path& input, ModeChoice mode, Streams io) {
    return guarded(io, [&] {
        const ComradeMatrix c = io::read_matrix(input);
        const Number det = with_retry(mode, io, [&](ScalarMode m) { return determinant(c, m); });
        io.out << to_string(det) << '\n';
        return ok;
    });
}

int cmd_inv(const std::filesystem::path& input, const std::filesystem::path& output, ModeChoice mode, Streams io) {
    return guarded(io, [&] {
        const ComradeMatrix c = io::read_matrix(input);
        const InverseResult r = with_retry(mode, io, [&](ScalarMode m) { return invert(c, m); });
        io::write_dense(as_rational(r), output);
        io.out << "mode: " << to_string(r.mode) << '\n';
        io.out << "determinant: " << to_string(r.determinant) << '\n';
        for (const auto& s : r.substitutions) {
            io.out << "substitution: " << to_string(s) << '\n';
        }
        io.out << "op_count: " << r.op_count << '\n';
        return ok;
    });
}

int cmd_check(const std::filesystem::path& input, ModeChoice mode, Streams io) {
    return guarded(io, [&] {
        const ComradeMatrix c = io::read_matrix(input);
        const InverseResult r = with_retry(mode, io, [&](ScalarMode m) { return invert(c, m); });
        if (const auto* q = std::get_if<DenseMatrix<Rational>>(&r.inverse)) {
            io.out << residual_norm(c, *q).str() << '\n';
        } else {
            io.out << to_string(residual_norm(c, std::get<DenseMatrix<double>>(r.inverse))) << '\n';
        }
        return ok;
    });
}

int cmd_gen(bench::Family family, int n, std::uint64_t seed, double zero_pivot_bias,
            const std::filesystem::path& output, Streams io) {
    return guarded(io, [&] {
        io::write_matrix(bench::generate(family, n, seed, zero_pivot_bias), output);
        return ok;
    });
}

int cmd_bench(const bench::BenchOptions& options, const std::filesystem::path& output, Streams io) {
    return guarded(io, [&] {
        const auto records = bench::run_bench(options, &io.err);
        if (output == "-") {
            bench::write_csv(io.out, records);
            return ok;
        }
        std::ofstream out(output, std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + output.string());
        }
        bench::write_csv(out, records);
        return ok;
    });
}

} // namespace comrade::cli
