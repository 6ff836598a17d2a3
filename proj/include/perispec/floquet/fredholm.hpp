#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "perispec/conventions.hpp"
#include "perispec/floquet/laurent_symbol.hpp"

namespace perispec {

/// A(z) = Σ A_j z^j. Rejects z = 0.
ComplexMatrix symbol_eval(const LaurentSymbol& s, Complex z);

struct CircleMinimum {
  double value = 0.0;  // min over θ of σ_min(A(e^{iθ}))
  double theta = 0.0;  // in [0, 2π)
  Complex z;           // e^{iθ}
};

/// Uniform scan of σ_min(A(e^{iθ})) on `grid` points, then golden-section
/// refinement around the three smallest grid values until the bracket is
/// narrower than refine_tol.
CircleMinimum min_singular_on_circle(const LaurentSymbol& s, int grid = conventions::kCircleGrid,
                                     double refine_tol = conventions::kRefineTol);

struct FredholmReport {
  bool is_fredholm = false;
  double min_singular = 0.0;
  std::optional<CircleMinimum> witness;
  std::optional<long> index;  // present only for Fredholm symbols small enough to wind
  int grid_used = 0;
  double tol = 0.0;
};

/// Invertibility of A(z) on |z| = 1, decided as min σ > tol. For Fredholm
/// symbols with N·d ≤ 64 the Toeplitz index is filled in.
FredholmReport is_fredholm(const LaurentSymbol& s, double tol = conventions::kFredholmTol,
                           int grid = conventions::kCircleGrid);

/// Winding number of det A(e^{iθ}) around 0, θ from 0 to 2π. Argument
/// increments are accumulated on a grid whose steps are halved until each
/// increment is below π/2.
long winding_number(const LaurentSymbol& s);

/// Index of the half-line Toeplitz operator T(a) = (A_{i−j})_{i,j≥0}:
/// kIndexSign · winding. Throws DomainError for non-Fredholm input.
long toeplitz_index(const LaurentSymbol& s);

/// (nN)×(nN) block matrix of the lattice operator on n periods, block (i, j)
/// equal to A_{j−i} (zero outside the band). Requires n ≥ 2d + 1.
ComplexMatrix finite_section(const LaurentSymbol& s, std::size_t periods);

enum class SectionVerdict { Stable, Decaying, Inconclusive };
std::string to_string(SectionVerdict v);

struct SectionReport {
  std::vector<std::size_t> sizes;
  std::vector<double> sigma_min;
  SectionVerdict verdict = SectionVerdict::Inconclusive;
};

/// σ_min of finite_section(S, n) for ascending sizes. Stable: the last two
/// values differ by < 20% and both exceed tol. Decaying: strictly
/// decreasing and the last value is below half the first.
SectionReport fredholm_via_sections(const LaurentSymbol& s, const std::vector<std::size_t>& sizes,
                                    double tol = conventions::kFredholmTol);

}  // namespace perispec
