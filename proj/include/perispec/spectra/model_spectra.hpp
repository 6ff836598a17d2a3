#pragma once

#include <cstddef>
#include <functional>
#include <variant>

#include "perispec/spectra/spectrum_sample.hpp"

namespace perispec {

enum class SpinStructure { Bounding, NonBounding };

/// Twist coefficient c in D^c = D + i·c·f*(dθ).
class TwistParameter {
 public:
  explicit TwistParameter(double c);
  double value() const noexcept { return c_; }

 private:
  double c_;
};

struct CircleModel {
  SpinStructure spin = SpinStructure::Bounding;
};
/// Round unit sphere S^ℓ, bounding spin structure when ℓ = 1.
struct SphereModel {
  std::size_t dimension = 2;
};
struct ProductWithSphere {
  SpectrumSample base_spectrum;
  std::size_t sphere_dimension = 2;
};
using ModelManifold = std::variant<CircleModel, SphereModel, ProductWithSphere>;

using SpectrumFamily = std::function<SpectrumSample(double)>;

/// Twisted circle spectrum: modes κ with |κ| ≤ band (κ ∈ ℤ + 1/2 for the
/// bounding structure, κ ∈ ℤ otherwise), eigenvalue κ + s·c with
/// s = conventions::kCliffordSign. Unit multiplicities.
SpectrumSample circle_spectrum(SpinStructure spin, TwistParameter c, std::size_t band);

/// Dirac spectrum of the round unit S^ℓ: ±(ℓ/2 + k), 0 ≤ k ≤ kmax, each with
/// multiplicity 2^⌊ℓ/2⌋·C(k+ℓ−1, k). ℓ = 1 reproduces the bounding circle.
SpectrumSample sphere_spectrum(std::size_t ell, std::size_t kmax);

/// Spectrum of D² on a product N × S^ℓ: {μ² + ν²} with product
/// multiplicities, keeping values ≤ cutoff.
SpectrumSample product_square_spectrum(const SpectrumSample& base, const SpectrumSample& sphere,
                                       double cutoff);

/// Spectrum of D (for ProductWithSphere: of D²) with the given truncation.
SpectrumSample model_spectrum(const ModelManifold& model, double c, std::size_t band,
                              double cutoff = 100.0);

/// Largest elementwise deviation between two spectra after truncation-edge
/// exclusion: the two outermost eigenvalues on each side of each sample are
/// dropped, the comparison window is the overlap of what remains, further
/// limited to |λ| ≤ band − 2. Infinity when the windows hold different
/// counts or the window is empty.
double spectral_distance(const SpectrumSample& a, const SpectrumSample& b, double tol = 1e-9);

/// spec(D^c) and spec(D^{c+1}) agree within tol.
bool check_twist_periodicity(const SpectrumFamily& spectra, double c, double tol);

/// spec(D^c) agrees with spec(D^0) within tol. Meaningful only for families
/// generated by an exact twist form.
bool check_exact_twist_invariance(const SpectrumFamily& spectra, double c, double tol);

/// min(spectrum of D²) ≥ κ_min/4 − tol. Negative entries violate the contract.
bool lichnerowicz_bound_check(const SpectrumSample& spectrum_sq, double kappa_min,
                              double tol = 1e-12);

/// Closed-form circle family c ↦ circle_spectrum(spin, c, band).
SpectrumFamily circle_family(SpinStructure spin, std::size_t band);

}  // namespace perispec
