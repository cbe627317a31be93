#include <doctest.h>

#include "comrade/errors.hpp"
#include "comrade/oracle.hpp"
#include "test_support.hpp"

using namespace comrade;
using namespace comrade::testing;
using comrade::oracle::dense_det;
using comrade::oracle::dense_invert;

namespace {

DenseMatrix<Rational> random_dense(Gen& gen, int n) {
    DenseMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = Rational(gen.integer(-5, 5));
        }
    }
    return m;
}

} // namespace

TEST_CASE("oracle determinant fixtures") {
    CHECK(dense_det(to_dense(example3_2())) == Rational(24));
    CHECK(dense_det(to_dense(example3_1())) == Rational(-1, 45));
    for (int n = 1; n <= 6; ++n) {
        CHECK(dense_det(DenseMatrix<Rational>::identity(n)) == Rational(1));
    }
    // one row swap flips the sign
    CHECK(dense_det(dense(2, {"0", "1", "1", "0"})) == Rational(-1));
    CHECK(dense_det(dense(2, {"1", "2", "2", "4"})).is_zero());
}

TEST_CASE("oracle inverse fixtures") {
    CHECK(dense_invert(DenseMatrix<Rational>::identity(4)) == DenseMatrix<Rational>::identity(4));
    CHECK(dense_invert(dense(3, {"2", "0", "0", "0", "4", "0", "0", "0", "8"})) ==
          dense(3, {"1/2", "0", "0", "0", "1/4", "0", "0", "0", "1/8"}));
    CHECK_THROWS_AS(dense_invert(dense(2, {"1", "2", "2", "4"})), SingularMatrixError);
}

TEST_CASE("oracle inverse is two-sided on random integer matrices") {
    Gen gen(31);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        const int n = gen.integer(1, 8);
        const auto m = random_dense(gen, n);
        const Rational det = dense_det(m);
        if (det.is_zero()) {
            CHECK_THROWS_AS(dense_invert(m), SingularMatrixError);
            continue;
        }
        const auto inv = dense_invert(m);
        const auto eye = DenseMatrix<Rational>::identity(n);
        CHECK(inv * m == eye);
        CHECK(m * inv == eye);
        CHECK(det * dense_det(inv) == Rational(1));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("determinant is invariant under row combination") {
    Gen gen(8);
    for (int k = 0; k < 200; ++k) {
        const int n = gen.integer(2, 7);
        auto m = random_dense(gen, n);
        const Rational before = dense_det(m);
        const int src = gen.integer(0, n - 1);
        int dst = gen.integer(0, n - 1);
        if (dst == src) {
            dst = (dst + 1) % n;
        }
        const Rational factor = gen.rational();
        for (int j = 0; j < n; ++j) {
            m(dst, j) += factor * m(src, j);
        }
        CHECK(dense_det(m) == before);
    }
}
