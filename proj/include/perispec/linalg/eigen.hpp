#pragma once

#include <vector>

#include "perispec/conventions.hpp"
#include "perispec/linalg/complex_matrix.hpp"

namespace perispec {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  /// max_i ‖M v_i − λ_i v_i‖ / ‖M‖
  double residual = 0.0;
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  /// Column i of `vectors` is the unit eigenvector for eigenvalues[i].
  ComplexMatrix vectors;
};

/// Cyclic Jacobi on a Hermitian matrix. Rejects non-square input and input
/// with ‖M − M*‖_F > tol·‖M‖_F. Throws DomainError when the residual of the
/// computed pairs exceeds tol.
EigResult hermitian_eigenvalues(const ComplexMatrix& m, double tol = conventions::kDefaultTol);

/// Eigenvalues and eigenvectors; same contract as hermitian_eigenvalues.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol = conventions::kDefaultTol);

/// Eigenvalues only, no residual certificate. For inner loops (sweeps,
/// bisection) where the caller has already validated the family.
std::vector<double> hermitian_eigenvalues_fast(const ComplexMatrix& m);

}  // namespace perispec
