#include "comrade/inverse.hpp"

namespace comrade {

DenseMatrix<Rational> evaluate_at_zero(const DenseMatrix<RationalFunction>& m) {
    const int n = m.order();
    DenseMatrix<Rational> out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const RationalFunction& f = m(i, j);
            if (f.den().at_zero().is_zero()) {
                throw PoleAtZeroError("S_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " = " + f.str());
            }
            out(i, j) = eval_at_zero(f);
        }
    }
    return out;
}

DenseMatrix<double> InverseResult::inverse_as_double() const {
    if (const auto* d = std::get_if<DenseMatrix<double>>(&inverse)) {
        return *d;
    }
    return transform<Rational, double>(std::get<DenseMatrix<Rational>>(inverse),
                                       [](const Rational& r) { return r.to_double(); });
}

InverseResult invert(const ComradeMatrix& c, ScalarMode mode, const InvertOptions& opts) {
    switch (mode) {
    case ScalarMode::exact: {
        auto r = invert_in<Rational>(c, opts);
        return {mode, std::move(r.inverse), std::move(r.determinant), std::move(r.substitutions), r.op_count};
    }
    case ScalarMode::symbolic: {
        auto r = invert_in<RationalFunction>(c, opts);
        return {mode, evaluate_at_zero(r.inverse), eval_at_zero(r.determinant), std::move(r.substitutions),
                r.op_count};
    }
    case ScalarMode::floating: {
        auto r = invert_in<double>(c, opts);
        return {mode, std::move(r.inverse), r.determinant, std::move(r.substitutions), r.op_count};
    }
    }
    throw Error("unknown scalar mode");
}

} // namespace comrade
