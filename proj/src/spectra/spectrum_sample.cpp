#include "perispec/spectra/spectrum_sample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perispec/error.hpp"

namespace perispec {

SpectrumSample SpectrumSample::from_values(std::vector<double> values, std::size_t band,
                                           double grouping_tol, bool graded) {
  std::vector<SpectralPair> pairs;
  std::sort(values.begin(), values.end());
  for (double v : values) {
    if (!std::isfinite(v)) throw ContractViolation("SpectrumSample: non-finite eigenvalue");
    pairs.push_back({v, 1});
  }
  return from_pairs(std::move(pairs), band, grouping_tol, graded);
}

SpectrumSample SpectrumSample::from_pairs(std::vector<SpectralPair> pairs, std::size_t band,
                                          double grouping_tol, bool graded) {
  if (!(grouping_tol >= 0.0)) throw ContractViolation("SpectrumSample: negative grouping tolerance");
  std::sort(pairs.begin(), pairs.end(),
            [](const SpectralPair& a, const SpectralPair& b) { return a.value < b.value; });
  SpectrumSample s;
  s.band_ = band;
  s.grouping_tol_ = grouping_tol;
  s.graded_ = graded;
  // Chain grouping: a run of values each within tol of its predecessor
  // merges into one pair at the multiplicity-weighted mean.
  for (const auto& p : pairs) {
    if (p.multiplicity == 0) throw ContractViolation("SpectrumSample: zero multiplicity");
    if (!s.pairs_.empty() && p.value - s.pairs_.back().value <= grouping_tol) {
      auto& last = s.pairs_.back();
      const double total = static_cast<double>(last.multiplicity + p.multiplicity);
      last.value = (last.value * static_cast<double>(last.multiplicity) +
                    p.value * static_cast<double>(p.multiplicity)) /
                   total;
      last.multiplicity += p.multiplicity;
    } else {
      s.pairs_.push_back(p);
    }
  }
  if (graded && !s.is_symmetric(std::max(grouping_tol, 1e-12))) {
    throw ContractViolation("SpectrumSample: graded spectrum is not symmetric under λ -> -λ");
  }
  return s;
}

std::vector<double> SpectrumSample::expanded() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& p : pairs_) out.insert(out.end(), p.multiplicity, p.value);
  return out;
}

std::size_t SpectrumSample::total_multiplicity() const {
  std::size_t n = 0;
  for (const auto& p : pairs_) n += p.multiplicity;
  return n;
}

double SpectrumSample::min() const {
  if (pairs_.empty()) throw ContractViolation("SpectrumSample::min: empty sample");
  return pairs_.front().value;
}

double SpectrumSample::max() const {
  if (pairs_.empty()) throw ContractViolation("SpectrumSample::max: empty sample");
  return pairs_.back().value;
}

double SpectrumSample::min_abs() const {
  if (pairs_.empty()) throw ContractViolation("SpectrumSample::min_abs: empty sample");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs_) m = std::min(m, std::abs(p.value));
  return m;
}

bool SpectrumSample::contains(double lambda, double tol) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [&](const SpectralPair& p) { return std::abs(p.value - lambda) <= tol; });
}

bool SpectrumSample::is_symmetric(double tol) const {
  const std::size_t n = pairs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pairs_[i];
    const auto& b = pairs_[n - 1 - i];
    if (std::abs(a.value + b.value) > tol || a.multiplicity != b.multiplicity) return false;
  }
  return true;
}

}  // namespace perispec
