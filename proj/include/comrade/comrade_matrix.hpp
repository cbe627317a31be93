#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "comrade/dense_matrix.hpp"
#include "comrade/errors.hpp"
#include "comrade/rational.hpp"
#include "comrade/scalar.hpp"

namespace comrade {

/// General comrade matrix of order n >= 3: a tridiagonal band plus a dense
/// last row.
///
///     | b1  a1                         |
///     | g2  b2  a2                     |
///     |     g3  b3  a3                 |
///     |         ..  ..  ..             |
///     |             g_n-1 b_n-1 a_n-1  |
///     | c_n c_n-1 ... c_3  g_n   b_n   |
///
/// (b = beta, a = alpha, g = gamma, c = the extra last-row coefficients.)
///
/// Accessors take the 1-based subscripts of the formulas:
/// beta(1..n), alpha(1..n-1), gamma(2..n), tail(3..n).
/// Storage keeps the tail in increasing subscript order (c_3 ... c_n).
template <class T>
class BasicComradeMatrix {
public:
    BasicComradeMatrix(int n, std::vector<T> beta, std::vector<T> alpha, std::vector<T> gamma, std::vector<T> tail)
        : n_(n), beta_(std::move(beta)), alpha_(std::move(alpha)), gamma_(std::move(gamma)), tail_(std::move(tail)) {
        if (n_ < 3) {
            throw OrderError("comrade matrix order must be at least 3, got " + std::to_string(n_));
        }
        check_length("beta", beta_.size(), n_);
        check_length("alpha", alpha_.size(), n_ - 1);
        check_length("gamma", gamma_.size(), n_ - 1);
        check_length("a", tail_.size(), n_ - 2);
    }

    int order() const noexcept { return n_; }

    const T& beta(int i) const { return beta_.at(static_cast<std::size_t>(i - 1)); }
    const T& alpha(int i) const { return alpha_.at(static_cast<std::size_t>(i - 1)); }
    const T& gamma(int i) const { return gamma_.at(static_cast<std::size_t>(i - 2)); }
    const T& tail(int i) const { return tail_.at(static_cast<std::size_t>(i - 3)); }

    const std::vector<T>& betas() const noexcept { return beta_; }
    const std::vector<T>& alphas() const noexcept { return alpha_; }
    const std::vector<T>& gammas() const noexcept { return gamma_; }
    const std::vector<T>& tails() const noexcept { return tail_; }

    /// Copy with alpha(j) replaced.
    BasicComradeMatrix with_alpha(int j, T value) const {
        BasicComradeMatrix copy = *this;
        copy.alpha_.at(static_cast<std::size_t>(j - 1)) = std::move(value);
        return copy;
    }

    /// Copy with beta(i) replaced.
    BasicComradeMatrix with_beta(int i, T value) const {
        BasicComradeMatrix copy = *this;
        copy.beta_.at(static_cast<std::size_t>(i - 1)) = std::move(value);
        return copy;
    }

    friend bool operator==(const BasicComradeMatrix&, const BasicComradeMatrix&) = default;

private:
    static void check_length(const char* field, std::size_t got, int want) {
        if (got != static_cast<std::size_t>(want)) {
            throw ShapeError(std::string("field \"") + field + "\" needs " + std::to_string(want) + " entries, got " +
                             std::to_string(got));
        }
    }

    int n_;
    std::vector<T> beta_;
    std::vector<T> alpha_;
    std::vector<T> gamma_;
    std::vector<T> tail_;
};

using ComradeMatrix = BasicComradeMatrix<Rational>;

inline ComradeMatrix make_comrade(int n, std::vector<Rational> beta, std::vector<Rational> alpha,
                                  std::vector<Rational> gamma, std::vector<Rational> a) {
    return ComradeMatrix(n, std::move(beta), std::move(alpha), std::move(gamma), std::move(a));
}

/// Converts every entry into the working field F.
template <Field F>
BasicComradeMatrix<F> lift(const ComradeMatrix& c) {
    auto conv = [](const std::vector<Rational>& v) {
        std::vector<F> out;
        out.reserve(v.size());
        for (const auto& r : v) {
            out.push_back(field_traits<F>::lift(r));
        }
        return out;
    };
    return BasicComradeMatrix<F>(c.order(), conv(c.betas()), conv(c.alphas()), conv(c.gammas()), conv(c.tails()));
}

template <class T>
DenseMatrix<T> to_dense(const BasicComradeMatrix<T>& c) {
    const int n = c.order();
    DenseMatrix<T> m(n, T(0));
    for (int i = 1; i <= n; ++i) {
        m(i - 1, i - 1) = c.beta(i);
    }
    for (int i = 1; i <= n - 1; ++i) {
        m(i - 1, i) = c.alpha(i);
    }
    for (int i = 2; i <= n; ++i) {
        m(i - 1, i - 2) = c.gamma(i);
    }
    // dense (n, j) holds tail(n - j + 1) for j = 1..n-2
    for (int j = 1; j <= n - 2; ++j) {
        m(n - 1, j - 1) = c.tail(n - j + 1);
    }
    return m;
}

/// The n x n test matrix with beta = -3/2 (beta_n = -2), alpha = 1/2,
/// gamma = 1/2 (gamma_n = 0) and last-row coefficients -1/2.
ComradeMatrix example33(int n);

/// Deterministic random matrix with integer entries in [-9, 9]. With
/// probability zero_pivot_bias each, beta_1 is forced to 0 and one interior
/// alpha_j (1 <= j <= n-2) is forced to 0.
ComradeMatrix random_comrade(int n, std::uint64_t seed, double zero_pivot_bias);

} // namespace comrade
