#pragma once

#include <cstddef>
#include <vector>

#include "perispec/floquet/laurent_symbol.hpp"
#include "perispec/linalg/complex_matrix.hpp"
#include "perispec/spectra/model_spectra.hpp"

namespace perispec {

enum class Scheme { Spectral, CentralDifference };

/// Discrete lift f̃ of a circle map sampled at θ_j = 2πj/n. Only one period
/// is stored; the lift continues by f̃_{j+n} = f̃_j + degree.
class WeightFunction {
 public:
  WeightFunction(std::vector<double> values, int degree);

  /// f̃_j = degree·j/n.
  static WeightFunction linear(std::size_t n, int degree);
  /// f̃_j = degree·j/n + periodic(θ_j).
  template <class F>
  static WeightFunction with_periodic_part(std::size_t n, int degree, F periodic);

  std::size_t size() const noexcept { return values_.size(); }
  int degree() const noexcept { return degree_; }
  const std::vector<double>& values() const noexcept { return values_; }
  /// Lifted value at any lattice index.
  double at(long j) const;

 private:
  std::vector<double> values_;
  int degree_;
};

/// Discrete circle Dirac operator D^c, optionally with an anticommuting mass.
/// With mass m ≠ 0 the matrix is the 2n×2n chiral doubling [[m, D], [D, −m]].
struct DiscreteDirac {
  std::size_t n = 0;
  Scheme scheme = Scheme::Spectral;
  SpinStructure spin = SpinStructure::Bounding;
  double c = 0.0;
  double mass = 0.0;
  ComplexMatrix core;    // n×n D^c
  ComplexMatrix matrix;  // the full operator (core, or its massive doubling)
};

/// θ_j = 2πj/n.
std::vector<double> grid_angles(std::size_t n);

/// z(c) = exp(−2πi·c), the unit-circle point whose Fourier–Laplace operator is D^c.
Complex twist_to_z(double c);

/// Spectral: trigonometric model, exact eigenvalues −κ + s·c over the n
/// grid modes (κ ∈ ℤ + 1/2 antiperiodic for Bounding, κ ∈ ℤ periodic
/// otherwise). CentralDifference: i·(ψ_{j+1} − ψ_{j−1})/(2h) with antiperiodic
/// (Bounding) or periodic (NonBounding) wrap, plus s·c on the diagonal.
/// Requires n ≥ 8 even.
DiscreteDirac build_circle_dirac(std::size_t n, Scheme scheme, SpinStructure spin, TwistParameter c,
                                 double mass = 0.0);

/// e^{−icu}·D·e^{icu} for a degree-0 weight u; isospectral to D.
ComplexMatrix gauge_conjugate(const DiscreteDirac& d, const WeightFunction& u, double c);

struct FourierLaplaceOperator {
  ComplexMatrix matrix;
  Complex log_z;  // branch of ln z actually used
  int branch = 0;
};

/// D_z = z^{f̃}·D·z^{−f̃} for a degree-1 lift f̃, taken on the cover and
/// restricted to periodic sections. ln z = Log z + 2πi·branch. D must be
/// untwisted (c = 0). For z = twist_to_z(c) the result is isospectral to D^c
/// (exactly for Spectral, to O(h²) for CentralDifference).
FourierLaplaceOperator fourier_laplace_family(const DiscreteDirac& d, const WeightFunction& f,
                                              Complex z, int branch = 0);

/// Period blocks of the cover operator as a symbol in the Fourier–Laplace
/// convention: symbol_eval at z is unitarily equivalent to D_z.
/// CentralDifference only (the spectral model is not banded on the cover).
LaurentSymbol fourier_laplace_symbol(const DiscreteDirac& d);

/// Finite section of the cover operator D(X̃): `periods` copies of the period
/// block joined by the seam hopping terms, open at both ends.
/// CentralDifference only.
ComplexMatrix cover_operator_sections(const DiscreteDirac& d, std::size_t periods);

template <class F>
WeightFunction WeightFunction::with_periodic_part(std::size_t n, int degree, F periodic) {
  const auto theta = grid_angles(n);
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = static_cast<double>(degree) * static_cast<double>(j) / static_cast<double>(n) +
           periodic(theta[j]);
  return WeightFunction(std::move(v), degree);
}

}  // namespace perispec
