#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "comrade/comrade_matrix.hpp"
#include "comrade/errors.hpp"
#include "comrade/inverse.hpp"
#include "comrade/io.hpp"
#include "comrade/lu.hpp"
#include "comrade/oracle.hpp"
#include "comrade/scalar.hpp"

namespace py = pybind11;
using namespace comrade;

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string str_of(const Rational& v) { return v.str(); }
std::string str_of(const RationalFunction& v) { return v.str(); }
std::string str_of(double v) { return comrade::to_string(v); }

template <class F>
std::vector<std::string> strs(const std::vector<F>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.push_back(str_of(e));
    }
    return out;
}

std::vector<std::string> subs_of(const std::vector<Substitution>& subs) {
    std::vector<std::string> out;
    for (const auto& s : subs) {
        out.push_back(to_string(s));
    }
    return out;
}

template <class T>
Rows rows_of(const DenseMatrix<T>& m) {
    Rows rows(static_cast<std::size_t>(m.order()));
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            rows[static_cast<std::size_t>(i)].push_back(str_of(m(i, j)));
        }
    }
    return rows;
}

DenseMatrix<Rational> dense_of(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Rational> entries;
    entries.reserve(rows.size() * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw ShapeError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(n));
        }
        for (const auto& s : rows[i]) {
            entries.push_back(Rational::parse(s));
        }
    }
    return DenseMatrix<Rational>(n, std::move(entries));
}

template <Field F>
py::dict factor_dict(const ComradeMatrix& c) {
    OpCounter ops;
    const auto f = factorize(lift<F>(c), &ops);
    py::dict d;
    d["mu"] = strs(f.mu);
    d["x"] = strs(f.x);
    d["substitutions"] = subs_of(f.substitutions);
    d["op_count"] = ops.count();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "O(n^2) determinant and inverse of comrade matrices";

    auto base = py::register_exception<Error>(m, "ComradeError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<OrderError>(m, "OrderError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", base.ptr());
    py::register_exception<PoleAtZeroError>(m, "PoleAtZeroError", domain.ptr());
    py::register_exception<ZeroPivotError>(m, "ZeroPivotError", base.ptr());

    m.def(
        "determinant",
        [](const std::string& json, const std::string& mode) {
            OpCounter ops;
            const Number d = comrade::determinant(io::parse_matrix_json(json), parse_mode(mode), &ops);
            return std::make_tuple(comrade::to_string(d), ops.count());
        },
        py::arg("matrix_json"), py::arg("mode"));

    m.def(
        "invert",
        [](const std::string& json, const std::string& mode, bool parallel_columns) {
            const InverseResult r =
                comrade::invert(io::parse_matrix_json(json), parse_mode(mode), InvertOptions{parallel_columns});
            Rows rows = std::visit([](const auto& s) { return rows_of(s); }, r.inverse);
            return std::make_tuple(std::move(rows), comrade::to_string(r.determinant), subs_of(r.substitutions),
                                   r.op_count);
        },
        py::arg("matrix_json"), py::arg("mode"), py::arg("parallel_columns") = false);

    m.def(
        "factorize",
        [](const std::string& json, const std::string& mode) -> py::dict {
            const ComradeMatrix c = io::parse_matrix_json(json);
            switch (parse_mode(mode)) {
            case ScalarMode::exact:
                return factor_dict<Rational>(c);
            case ScalarMode::symbolic:
                return factor_dict<RationalFunction>(c);
            case ScalarMode::floating:
                return factor_dict<double>(c);
            }
            throw DomainError("unknown mode");
        },
        py::arg("matrix_json"), py::arg("mode"));

    m.def(
        "dense", [](const std::string& json) { return rows_of(to_dense(io::parse_matrix_json(json))); },
        py::arg("matrix_json"));
    m.def(
        "dense_det", [](const Rows& rows) { return oracle::dense_det(dense_of(rows)).str(); }, py::arg("rows"));
    m.def(
        "dense_invert", [](const Rows& rows) { return rows_of(oracle::dense_invert(dense_of(rows))); },
        py::arg("rows"));

    m.def(
        "example33", [](int n) { return io::matrix_to_json(comrade::example33(n)); }, py::arg("n"));
    m.def(
        "random_comrade",
        [](int n, std::uint64_t seed, double bias) { return io::matrix_to_json(comrade::random_comrade(n, seed, bias)); },
        py::arg("n"), py::arg("seed"), py::arg("zero_pivot_bias") = 0.0);
}
