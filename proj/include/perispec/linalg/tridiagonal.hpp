#pragma once

#include <vector>

#include "perispec/linalg/complex_matrix.hpp"

namespace perispec {

/// Eigenvalues of the real symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off` (size n − 1), ascending. Implicit QL with
/// Wilkinson shifts; absolute accuracy of order ε·‖T‖.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

struct Bidiagonal {
  std::vector<double> diag;  // k = min(rows, cols) entries, all ≥ 0
  std::vector<double> super; // k − 1 entries, all ≥ 0
};

/// Householder reduction U*·M·V = B to upper bidiagonal form, B made real and
/// nonnegative by diagonal unitary scaling. Requires rows ≥ cols.
Bidiagonal householder_bidiagonalize(const ComplexMatrix& m);

/// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
/// form with the same eigenvalues. Returns (diagonal, off-diagonal magnitudes).
std::pair<std::vector<double>, std::vector<double>> householder_tridiagonalize(const ComplexMatrix& m);

}  // namespace perispec
