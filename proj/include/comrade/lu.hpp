#pragma once

#include <string>
#include <utility>
#include <vector>

#include "comrade/comrade_matrix.hpp"
#include "comrade/dense_matrix.hpp"
#include "comrade/errors.hpp"
#include "comrade/scalar.hpp"

namespace comrade {

/// One "replace zero by t" event; index is the 1-based subscript.
struct Substitution {
    SubstitutionKind kind;
    int index;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// e.g. "mu_1 := t", "alpha_2 := t"
std::string to_string(const Substitution& s);

/// Doolittle factors C = L U of a comrade matrix.
///
/// L is unit lower bidiagonal with subdiagonal gamma_i / mu_{i-1} and a dense
/// last row (x_1, ..., x_{n-1}, 1); U is upper bidiagonal with diagonal mu
/// and superdiagonal alpha. mu[i-1] holds mu_i, x[i-1] holds x_i.
template <class F>
struct LUFactors {
    std::vector<F> mu;
    std::vector<F> x;
    std::vector<Substitution> substitutions;

    const F& pivot(int i) const { return mu.at(static_cast<std::size_t>(i - 1)); }
    const F& last_row(int i) const { return x.at(static_cast<std::size_t>(i - 1)); }
};

/// Runs the O(n) pivot and last-row recurrences.
///
/// In the symbolic field a pivot that is identically zero is replaced by t
/// and logged. In the exact and float fields a zero pivot mu_i, i < n, throws
/// ZeroPivotError; mu_n is never a divisor, so mu_n = 0 is kept (the matrix
/// is then singular).
template <Field F>
LUFactors<F> factorize(const BasicComradeMatrix<F>& c, OpCounter* ops = nullptr) {
    using traits = field_traits<F>;
    const int n = c.order();
    LUFactors<F> f;
    f.mu.resize(static_cast<std::size_t>(n));
    f.x.resize(static_cast<std::size_t>(n - 1));
    auto mu = [&](int i) -> F& { return f.mu[static_cast<std::size_t>(i - 1)]; };
    auto x = [&](int i) -> F& { return f.x[static_cast<std::size_t>(i - 1)]; };

    auto settle = [&](int i, bool divisor) {
        if (!traits::is_zero(mu(i))) {
            return;
        }
        if constexpr (traits::symbolic) {
            mu(i) = traits::indeterminate();
            f.substitutions.push_back({SubstitutionKind::pivot, i});
        } else if (divisor) {
            throw ZeroPivotError(SubstitutionKind::pivot, i);
        }
    };

    mu(1) = c.beta(1);
    settle(1, true);
    x(1) = c.tail(n) / mu(1);
    tick(ops, 1);

    for (int i = 2; i <= n - 1; ++i) {
        mu(i) = c.beta(i) - (c.alpha(i - 1) / mu(i - 1)) * c.gamma(i);
        tick(ops, 3);
        settle(i, true);
        if (i <= n - 2) {
            x(i) = (c.tail(n - i + 1) - c.alpha(i - 1) * x(i - 1)) / mu(i);
            tick(ops, 3);
        }
    }
    x(n - 1) = (c.gamma(n) - c.alpha(n - 2) * x(n - 2)) / mu(n - 1);
    tick(ops, 3);

    mu(n) = c.beta(n) - c.alpha(n - 1) * x(n - 1);
    tick(ops, 2);
    settle(n, false);
    return f;
}

/// Product of the pivots, reduced after every multiplication.
template <Field F>
F pivot_product(const LUFactors<F>& f, OpCounter* ops = nullptr) {
    F acc = f.mu.front();
    for (std::size_t i = 1; i < f.mu.size(); ++i) {
        acc = acc * f.mu[i];
    }
    tick(ops, f.mu.size() - 1);
    return acc;
}

/// det(C) in the field F before any t = 0 substitution.
template <Field F>
F determinant_in(const BasicComradeMatrix<F>& c, OpCounter* ops = nullptr) {
    return pivot_product(factorize(c, ops), ops);
}

/// Determinant of a comrade matrix. Symbolic results are evaluated at t = 0
/// and returned as exact rationals.
Number determinant(const ComradeMatrix& c, ScalarMode mode, OpCounter* ops = nullptr);

/// Dense L and U rebuilt from the factors and the matrix they came from.
template <Field F>
std::pair<DenseMatrix<F>, DenseMatrix<F>> reconstruct_lu(const LUFactors<F>& f, const BasicComradeMatrix<F>& c) {
    const int n = c.order();
    auto L = DenseMatrix<F>::identity(n);
    auto U = DenseMatrix<F>(n, F(0));
    for (int i = 2; i <= n - 1; ++i) {
        L(i - 1, i - 2) = c.gamma(i) / f.pivot(i - 1);
    }
    for (int j = 1; j <= n - 1; ++j) {
        L(n - 1, j - 1) = f.last_row(j);
    }
    for (int i = 1; i <= n; ++i) {
        U(i - 1, i - 1) = f.pivot(i);
        if (i < n) {
            U(i - 1, i) = c.alpha(i);
        }
    }
    return {std::move(L), std::move(U)};
}

} // namespace comrade
