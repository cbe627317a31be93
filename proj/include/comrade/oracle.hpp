#pragma once

#include "comrade/dense_matrix.hpp"
#include "comrade/rational.hpp"

namespace comrade::oracle {

/// Exact determinant by Gaussian elimination. Row exchanges pick the first
/// nonzero entry below the diagonal. Singular input returns 0.
Rational dense_det(const DenseMatrix<Rational>& m);

/// Exact inverse by Gauss-Jordan elimination on [M | I].
/// Throws SingularMatrixError.
DenseMatrix<Rational> dense_invert(const DenseMatrix<Rational>& m);

} // namespace comrade::oracle
