#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comrade/errors.hpp"

namespace comrade {

/// Square row-major matrix. Indices are 0-based.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n, const T& fill = T()) : n_(n), entries_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 0) {
            throw ShapeError("negative matrix order");
        }
    }
    DenseMatrix(int n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
        if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n) {
            throw ShapeError("dense matrix needs n*n entries");
        }
    }

    static DenseMatrix identity(int n, const T& zero = T(0), const T& one = T(1)) {
        DenseMatrix m(n, zero);
        for (int i = 0; i < n; ++i) {
            m(i, i) = one;
        }
        return m;
    }

    int order() const noexcept { return n_; }
    T& operator()(int i, int j) { return entries_[index(i, j)]; }
    const T& operator()(int i, int j) const { return entries_[index(i, j)]; }
    std::span<const T> entries() const noexcept { return entries_; }
    std::span<T> row(int i) { return {entries_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }
    std::span<const T> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<T> entries_;
};

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.order() != b.order()) {
        throw ShapeError("matrix orders differ");
    }
    const int n = a.order();
    DenseMatrix<T> c(n, T(0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                c(i, j) = c(i, j) + aik * b(k, j);
            }
        }
    }
    return c;
}

template <class T, class U, class F>
DenseMatrix<U> transform(const DenseMatrix<T>& m, F&& f) {
    std::vector<U> out;
    out.reserve(m.entries().size());
    for (const auto& v : m.entries()) {
        out.push_back(f(v));
    }
    return DenseMatrix<U>(m.order(), std::move(out));
}

} // namespace comrade
