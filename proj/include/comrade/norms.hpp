#pragma once

#include <algorithm>
#include <cmath>

#include "comrade/comrade_matrix.hpp"
#include "comrade/dense_matrix.hpp"
#include "comrade/rational.hpp"

namespace comrade {

/// Induced infinity norm (largest absolute row sum) of a - b.
inline double inf_norm_diff(const DenseMatrix<double>& a, const DenseMatrix<double>& b) {
    if (a.order() != b.order()) {
        throw ShapeError("matrix orders differ");
    }
    double worst = 0.0;
    for (int i = 0; i < a.order(); ++i) {
        double sum = 0.0;
        for (int j = 0; j < a.order(); ++j) {
            sum += std::abs(a(i, j) - b(i, j));
        }
        // NaN must not be swallowed by max
        if (std::isnan(sum)) {
            return sum;
        }
        worst = std::max(worst, sum);
    }
    return worst;
}

inline Rational inf_norm_diff(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
    if (a.order() != b.order()) {
        throw ShapeError("matrix orders differ");
    }
    Rational worst;
    for (int i = 0; i < a.order(); ++i) {
        Rational sum;
        for (int j = 0; j < a.order(); ++j) {
            sum += (a(i, j) - b(i, j)).abs();
        }
        worst = std::max(worst, sum);
    }
    return worst;
}

/// ||C X - I|| in the induced infinity norm.
template <class T>
T residual_norm(const ComradeMatrix& c, const DenseMatrix<T>& x) {
    DenseMatrix<T> dense;
    if constexpr (std::is_same_v<T, double>) {
        dense = to_dense(lift<double>(c));
    } else {
        dense = to_dense(c);
    }
    return inf_norm_diff(dense * x, DenseMatrix<T>::identity(c.order()));
}

} // namespace comrade
