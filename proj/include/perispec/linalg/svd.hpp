#pragma once

#include <cstddef>
#include <vector>

#include "perispec/linalg/complex_matrix.hpp"

namespace perispec {

/// Singular values, descending, count min(rows, cols).
///
/// Computed from the Jacobi eigendecomposition of the Gram matrix M*M (or
/// MM* when M is wide), followed by a one-sided Jacobi re-orthogonalization
/// of the columns of M·V. The second stage restores absolute accuracy
/// ε‖M‖ for small singular values, which squaring alone would lose.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Singular values, descending, via Householder bidiagonalization and the
/// eigenvalues of the Golub–Kahan tridiagonal. Absolute accuracy of order
/// ε‖M‖ only; small singular values carry no relative guarantee.
std::vector<double> singular_values_fast(const ComplexMatrix& m);

/// Above this min(rows, cols), min_singular_value and numeric_kernel_dim
/// switch from the Jacobi path to singular_values_fast.
inline constexpr std::size_t kFastSvdThreshold = 64;

/// Smallest singular value.
double min_singular_value(const ComplexMatrix& m);

/// Number of singular values below tol·σ_max (σ_max read as 1 when M = 0).
std::size_t numeric_kernel_dim(const ComplexMatrix& m, double tol);

}  // namespace perispec
