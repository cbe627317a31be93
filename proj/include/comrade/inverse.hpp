#pragma once

#include <cstdint>
#include <future>
#include <variant>
#include <vector>

#include "comrade/comrade_matrix.hpp"
#include "comrade/dense_matrix.hpp"
#include "comrade/errors.hpp"
#include "comrade/lu.hpp"
#include "comrade/scalar.hpp"

namespace comrade {

/// Standard basis vector E_r of dimension n, r 1-based.
struct BasisVector {
    int r;
    int n;

    /// Component i (1-based): 1 if i == r, else 0.
    template <class F>
    F at(int i) const {
        return i == r ? F(1) : F(0);
    }
};

/// Col_n and Col_{n-1} of the inverse; entry i-1 holds S_{i,n} (resp. S_{i,n-1}).
template <class F>
struct LastColumns {
    std::vector<F> last;
    std::vector<F> second_last;
};

/// Solves U s = (0, ..., 0, 1)^T, i.e. the last column of C^-1.
template <Field F>
std::vector<F> last_column(const LUFactors<F>& f, const BasicComradeMatrix<F>& c, OpCounter* ops = nullptr) {
    const int n = c.order();
    std::vector<F> s(static_cast<std::size_t>(n));
    auto S = [&](int i) -> F& { return s[static_cast<std::size_t>(i - 1)]; };
    S(n) = F(1) / f.pivot(n);
    tick(ops, 1);
    for (int i = n - 1; i >= 1; --i) {
        S(i) = -(c.alpha(i) * S(i + 1)) / f.pivot(i);
        tick(ops, 2);
    }
    return s;
}

/// Solves U s = (0, ..., 0, 1, -x_{n-1})^T, i.e. column n-1 of C^-1.
template <Field F>
std::vector<F> second_last_column(const LUFactors<F>& f, const BasicComradeMatrix<F>& c, OpCounter* ops = nullptr) {
    const int n = c.order();
    std::vector<F> s(static_cast<std::size_t>(n));
    auto S = [&](int i) -> F& { return s[static_cast<std::size_t>(i - 1)]; };
    S(n) = -f.last_row(n - 1) / f.pivot(n);
    S(n - 1) = (F(1) - c.alpha(n - 1) * S(n)) / f.pivot(n - 1);
    tick(ops, 4);
    for (int i = n - 2; i >= 1; --i) {
        S(i) = -(c.alpha(i) * S(i + 1)) / f.pivot(i);
        tick(ops, 2);
    }
    return s;
}

/// The two back substitutions are independent; with parallel set they run
/// on two threads. The result does not depend on the flag.
template <Field F>
LastColumns<F> last_two_columns(const LUFactors<F>& f, const BasicComradeMatrix<F>& c, OpCounter* ops = nullptr,
                                bool parallel = false) {
    if (!parallel) {
        LastColumns<F> cols;
        cols.last = last_column(f, c, ops);
        cols.second_last = second_last_column(f, c, ops);
        return cols;
    }
    OpCounter side;
    auto pending = std::async(std::launch::async, [&] { return second_last_column(f, c, &side); });
    LastColumns<F> cols;
    cols.last = last_column(f, c, ops);
    cols.second_last = pending.get();
    tick(ops, side.count());
    return cols;
}

/// Fills the whole inverse: the two given columns, then Col_{n-2} down to
/// Col_1 from C^-1 C = I read column by column.
///
///   Col_{n-2} = (E_{n-1} - beta_{n-1} Col_{n-1} - gamma_n Col_n) / alpha_{n-2}
///   Col_j     = (E_{j+1} - beta_{j+1} Col_{j+1} - gamma_{j+2} Col_{j+2}
///                - a_{n-j} Col_n) / alpha_j,            j = n-3, ..., 1
///
/// Requires alpha_j != 0 for j <= n-2; the symbolic driver substitutes t first.
template <Field F>
DenseMatrix<F> remaining_columns(const LastColumns<F>& cols, const BasicComradeMatrix<F>& c,
                                 OpCounter* ops = nullptr) {
    const int n = c.order();
    DenseMatrix<F> s(n, F(0));
    auto S = [&](int i, int j) -> F& { return s(i - 1, j - 1); };
    for (int i = 1; i <= n; ++i) {
        S(i, n) = cols.last[static_cast<std::size_t>(i - 1)];
        S(i, n - 1) = cols.second_last[static_cast<std::size_t>(i - 1)];
    }
    auto require_divisor = [&](int j) {
        if (!field_traits<F>::is_zero(c.alpha(j))) {
            return;
        }
        if constexpr (field_traits<F>::symbolic) {
            throw DomainError("alpha_" + std::to_string(j) + " is zero; substitute t before the column recursion");
        } else {
            throw ZeroPivotError(SubstitutionKind::alpha, j);
        }
    };

    require_divisor(n - 2);
    const BasisVector e_nm1{n - 1, n};
    for (int i = 1; i <= n; ++i) {
        S(i, n - 2) = (e_nm1.at<F>(i) - c.beta(n - 1) * S(i, n - 1) - c.gamma(n) * S(i, n)) / c.alpha(n - 2);
    }
    tick(ops, 5ULL * static_cast<std::uint64_t>(n));

    for (int j = n - 3; j >= 1; --j) {
        require_divisor(j);
        const BasisVector e{j + 1, n};
        for (int i = 1; i <= n; ++i) {
            S(i, j) = (e.at<F>(i) - c.beta(j + 1) * S(i, j + 1) - c.gamma(j + 2) * S(i, j + 2) -
                       c.tail(n - j) * S(i, n)) /
                      c.alpha(j);
        }
        tick(ops, 7ULL * static_cast<std::uint64_t>(n));
    }
    return s;
}

struct InvertOptions {
    bool parallel_columns = false;
};

/// Inverse in the working field, before the final t = 0 substitution.
template <class F>
struct FieldInverse {
    DenseMatrix<F> inverse;
    F determinant;
    std::vector<Substitution> substitutions;
    std::uint64_t op_count = 0;
};

/// The full inversion pipeline in field F:
///   1. factorize and form the determinant; fail if C is singular
///   2. (symbolic) zero pivots become t during factorization
///   3. (symbolic) zero alpha_j, j <= n-2, become t; the perturbed matrix is
///      refactorized, and each pivot substitution mu_i := t is folded back
///      into beta_i so that factors and column formulas describe the same C(t)
///   4. Col_n, Col_{n-1}, then the column recursion
///
/// In the exact and float fields a zero pivot or zero alpha_j throws
/// ZeroPivotError.
template <Field F>
FieldInverse<F> invert_in(const ComradeMatrix& c, const InvertOptions& opts = {}) {
    using traits = field_traits<F>;
    const int n = c.order();
    OpCounter ops;
    BasicComradeMatrix<F> work = lift<F>(c);
    LUFactors<F> factors = factorize(work, &ops);
    F det = pivot_product(factors, &ops);

    bool singular = false;
    if constexpr (traits::symbolic) {
        singular = eval_at_zero(det).is_zero();
    } else {
        singular = traits::is_zero(det);
    }
    if (singular) {
        throw SingularMatrixError();
    }

    std::vector<Substitution> alpha_subs;
    for (int j = 1; j <= n - 2; ++j) {
        if (!traits::is_zero(work.alpha(j))) {
            continue;
        }
        if constexpr (traits::symbolic) {
            work = work.with_alpha(j, traits::indeterminate());
            alpha_subs.push_back({SubstitutionKind::alpha, j});
        } else {
            throw ZeroPivotError(SubstitutionKind::alpha, j);
        }
    }
    if (!alpha_subs.empty()) {
        factors = factorize(work, &ops);
    }
    if constexpr (traits::symbolic) {
        // mu_i := t replaced an identically zero pivot, which is the same as
        // beta_i + t; the column recursion reads beta_2..beta_{n-1} and must
        // see the perturbed values
        for (const Substitution& s : factors.substitutions) {
            work = work.with_beta(s.index, work.beta(s.index) + traits::indeterminate());
        }
    }

    const auto cols = last_two_columns(factors, work, &ops, opts.parallel_columns);
    FieldInverse<F> out{remaining_columns(cols, work, &ops), std::move(det), std::move(alpha_subs), 0};
    out.substitutions.insert(out.substitutions.begin(), factors.substitutions.begin(), factors.substitutions.end());
    out.op_count = ops.count();
    return out;
}

/// Substitutes t = 0 entrywise. Throws PoleAtZeroError naming the entry.
DenseMatrix<Rational> evaluate_at_zero(const DenseMatrix<RationalFunction>& m);

struct InverseResult {
    ScalarMode mode;
    /// Rational for the exact and symbolic modes, double for float mode.
    std::variant<DenseMatrix<Rational>, DenseMatrix<double>> inverse;
    Number determinant;
    std::vector<Substitution> substitutions;
    std::uint64_t op_count = 0;

    DenseMatrix<double> inverse_as_double() const;
};

/// Inverts a nonsingular comrade matrix in O(n^2) field operations.
InverseResult invert(const ComradeMatrix& c, ScalarMode mode, const InvertOptions& opts = {});

} // namespace comrade
