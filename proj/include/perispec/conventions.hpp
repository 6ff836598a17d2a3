#pragma once

// Conventions shared by every module. Tests and the CLI convention block
// read these constants instead of restating them.

namespace perispec::conventions {

/// Clifford multiplication by dθ on the circle's spinor line acts as +i, so
/// the twist term i·c·f*(dθ) acts as the real scalar kCliffordSign·c.
inline constexpr int kCliffordSign = -1;

/// Toeplitz index = kIndexSign · winding(det A(z)).
inline constexpr int kIndexSign = -1;

/// Branch of ln z used by the Fourier–Laplace conjugation: principal value
/// Log z (imaginary part in (−π, π]) plus 2πi·branch, branch = 0 by default.
inline constexpr int kDefaultLogBranch = 0;

/// Default relative tolerance for linear-algebra contracts.
inline constexpr double kDefaultTol = 1e-9;

/// Absolute tolerance for merging numerically equal eigenvalues.
inline constexpr double kGroupingTol = 1e-7;

/// Absolute tolerance on min σ over |z| = 1 for the Fredholm verdict.
inline constexpr double kFredholmTol = 1e-6;

/// Unit-circle scan resolution and golden-section refinement target.
inline constexpr int kCircleGrid = 512;
inline constexpr double kRefineTol = 1e-8;

/// Default grid size for discrete circle models.
inline constexpr int kDefaultGrid = 64;

inline constexpr const char* kCliffordText =
    "Clifford(dtheta) = +i on the circle spinor line; D^c = D - c (s = -1)";
inline constexpr const char* kIndexText =
    "index T(a) = -winding(det a) for the half-line Toeplitz operator (A_{i-j})";
inline constexpr const char* kBranchText =
    "ln z = Log z + 2*pi*i*branch, Log principal (arg in (-pi, pi]); z(c) = exp(-2*pi*i*c)";

}  // namespace perispec::conventions
