#include "comrade/oracle.hpp"

#include <utility>

#include "comrade/errors.hpp"

namespace comrade::oracle {

namespace {

int first_nonzero_row(const DenseMatrix<Rational>& a, int col, int from) {
    for (int r = from; r < a.order(); ++r) {
        if (!a(r, col).is_zero()) {
            return r;
        }
    }
    return -1;
}

void swap_rows(DenseMatrix<Rational>& a, int r1, int r2) {
    auto x = a.row(r1);
    auto y = a.row(r2);
    for (std::size_t k = 0; k < x.size(); ++k) {
        std::swap(x[k], y[k]);
    }
}

} // namespace

Rational dense_det(const DenseMatrix<Rational>& m) {
    DenseMatrix<Rational> a = m;
    const int n = a.order();
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        const int p = first_nonzero_row(a, k, k);
        if (p < 0) {
            return Rational(0);
        }
        if (p != k) {
            swap_rows(a, p, k);
            det = -det;
        }
        const Rational pivot = a(k, k);
        det *= pivot;
        for (int r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) {
                continue;
            }
            const Rational factor = a(r, k) / pivot;
            for (int c = k; c < n; ++c) {
                if (!a(k, c).is_zero()) {
                    a(r, c) -= factor * a(k, c);
                }
            }
        }
    }
    return det;
}

DenseMatrix<Rational> dense_invert(const DenseMatrix<Rational>& m) {
    const int n = m.order();
    DenseMatrix<Rational> a = m;
    DenseMatrix<Rational> inv = DenseMatrix<Rational>::identity(n);
    for (int k = 0; k < n; ++k) {
        const int p = first_nonzero_row(a, k, k);
        if (p < 0) {
            throw SingularMatrixError();
        }
        if (p != k) {
            swap_rows(a, p, k);
            swap_rows(inv, p, k);
        }
        const Rational scale = Rational(1) / a(k, k);
        for (int c = 0; c < n; ++c) {
            if (!a(k, c).is_zero()) {
                a(k, c) *= scale;
            }
            if (!inv(k, c).is_zero()) {
                inv(k, c) *= scale;
            }
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || a(r, k).is_zero()) {
                continue;
            }
            const Rational factor = a(r, k);
            for (int c = 0; c < n; ++c) {
                if (!a(k, c).is_zero()) {
                    a(r, c) -= factor * a(k, c);
                }
                if (!inv(k, c).is_zero()) {
                    inv(r, c) -= factor * inv(k, c);
                }
            }
        }
    }
    return inv;
}

} // namespace comrade::oracle
