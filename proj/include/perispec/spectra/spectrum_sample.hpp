#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "perispec/conventions.hpp"

namespace perispec {

struct SpectralPair {
  double value;
  std::size_t multiplicity;
  friend bool operator==(const SpectralPair&, const SpectralPair&) = default;
};

/// Sorted eigenvalue/multiplicity list. Eigenvalues are strictly increasing
/// after grouping; `band` records the truncation radius of the model that
/// produced the sample so comparisons can stay away from the cut.
class SpectrumSample {
 public:
  SpectrumSample() = default;

  /// Groups raw eigenvalues closer than `grouping_tol` into multiplicities.
  /// With `graded`, the sample must be symmetric under λ ↦ −λ.
  static SpectrumSample from_values(std::vector<double> values, std::size_t band,
                                    double grouping_tol = conventions::kGroupingTol,
                                    bool graded = false);
  static SpectrumSample from_pairs(std::vector<SpectralPair> pairs, std::size_t band,
                                   double grouping_tol = conventions::kGroupingTol,
                                   bool graded = false);

  std::span<const SpectralPair> pairs() const noexcept { return pairs_; }
  std::size_t band() const noexcept { return band_; }
  double grouping_tol() const noexcept { return grouping_tol_; }
  bool graded() const noexcept { return graded_; }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Eigenvalues repeated by multiplicity, ascending.
  std::vector<double> expanded() const;
  std::size_t total_multiplicity() const;
  double min() const;
  double max() const;
  double min_abs() const;
  bool contains(double lambda, double tol) const;
  /// True when the sample is symmetric under λ ↦ −λ within tol.
  bool is_symmetric(double tol) const;

 private:
  std::vector<SpectralPair> pairs_;
  std::size_t band_ = 0;
  double grouping_tol_ = conventions::kGroupingTol;
  bool graded_ = false;
};

}  // namespace perispec
