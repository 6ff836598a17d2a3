#pragma once

#include <cstddef>
#include <map>

#include "perispec/linalg/complex_matrix.hpp"

namespace perispec {

/// Banded block symbol A(z) = Σ_{j=-d}^{d} A_j z^j of a periodic lattice
/// operator (Lψ)_m = Σ_j A_j ψ_{m+j}. Coefficients are N×N; absent j are zero.
class LaurentSymbol {
 public:
  LaurentSymbol(std::size_t block_size, std::map<int, ComplexMatrix> coeffs);

  /// Scalar symbol Σ a_j z^j.
  static LaurentSymbol scalar(const std::map<int, Complex>& coeffs);
  /// Scalar symbol z^{-shift}·Π (z − r_k).
  static LaurentSymbol from_roots(std::span<const Complex> roots, int shift = 0,
                                  Complex leading = 1.0);

  std::size_t block_size() const noexcept { return block_; }
  /// d = max |j| over stored coefficients.
  int bandwidth() const noexcept { return bandwidth_; }
  int min_power() const noexcept { return coeffs_.begin()->first; }
  int max_power() const noexcept { return coeffs_.rbegin()->first; }
  const std::map<int, ComplexMatrix>& coefficients() const noexcept { return coeffs_; }
  /// A_j, or the zero block when j is absent.
  ComplexMatrix coefficient(int j) const;

  /// A_{−j} = A_j* for every j, so A(z) is Hermitian on |z| = 1.
  bool hermitian_symmetric(double tol = 1e-12) const;
  /// Σ |j|·‖A_j‖_F, a Lipschitz bound for θ ↦ A(e^{iθ}).
  double lipschitz_bound() const;

 private:
  std::size_t block_;
  int bandwidth_ = 0;
  std::map<int, ComplexMatrix> coeffs_;
};

/// Block direct sum S ⊕ S′ (block size N + N′).
LaurentSymbol direct_sum(const LaurentSymbol& a, const LaurentSymbol& b);

/// Chirally doubled symbol [[m·I, A(z)], [A(z), −m·I]]. For Hermitian-symmetric
/// A its square is A(z)² + m², so the result is invertible on |z| = 1 for m ≠ 0.
LaurentSymbol with_mass(const LaurentSymbol& s, double mass);

}  // namespace perispec
