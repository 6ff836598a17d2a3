#pragma once

#include <functional>
#include <vector>

#include "perispec/linalg/complex_matrix.hpp"

namespace perispec {

using HermitianFamily = std::function<ComplexMatrix(double)>;

struct Crossing {
  double parameter;
  int direction;  // +1: an eigenvalue moves from negative to positive
};

struct SpectralFlowResult {
  long flow = 0;  // Σ directions
  std::vector<Crossing> crossings;
  /// family(0) and family(1) agree in spectrum after truncation-edge exclusion.
  bool endpoints_isospectral = false;
};

struct SpectralFlowOptions {
  int steps = 200;
  double zero_tol = 1e-10;    // |λ| below zero_tol·max(1, ‖M‖) counts as zero
  double locate_tol = 1e-10;  // bisection bracket width
};

/// Net signed count of eigenvalues of a Hermitian family on [0, 1] crossing
/// zero. The negative-eigenvalue count is sampled on a uniform grid and each
/// change is bracketed by bisection. An eigenvalue that stays at zero over a
/// whole grid cell raises DomainError.
SpectralFlowResult spectral_flow(const HermitianFamily& family, const SpectralFlowOptions& opts = {});

}  // namespace perispec
