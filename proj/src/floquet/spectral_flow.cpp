#include "perispec/floquet/spectral_flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "perispec/error.hpp"
#include "perispec/linalg/eigen.hpp"
#include "perispec/spectra/spectrum_sample.hpp"
#include "perispec/spectra/model_spectra.hpp"

namespace perispec {

namespace {

struct Sample {
  long negatives;
  double min_abs;
  std::vector<double> values;
};

Sample sample(const HermitianFamily& family, double t, double zero_tol) {
  const ComplexMatrix m = family(t);
  Sample s;
  s.values = hermitian_eigenvalues_fast(m);
  const double zt = zero_tol * std::max(1.0, m.norm_fro());
  s.negatives = std::count_if(s.values.begin(), s.values.end(), [&](double v) { return v < -zt; });
  s.min_abs = std::abs(*std::min_element(s.values.begin(), s.values.end(),
                                         [](double a, double b) { return std::abs(a) < std::abs(b); }));
  return s;
}

}  // namespace

SpectralFlowResult spectral_flow(const HermitianFamily& family, const SpectralFlowOptions& opts) {
  if (opts.steps < 2) throw ContractViolation("spectral_flow: need at least two steps");
  SpectralFlowResult result;
  const double h = 1.0 / opts.steps;
  const double zt_abs = opts.zero_tol;

  Sample prev = sample(family, 0.0, opts.zero_tol);
  const Sample first = prev;
  for (int k = 1; k <= opts.steps; ++k) {
    const double a = (k - 1) * h;
    const double b = k * h;
    Sample cur = sample(family, b, opts.zero_tol);
    if (prev.min_abs <= zt_abs && cur.min_abs <= zt_abs &&
        sample(family, 0.5 * (a + b), opts.zero_tol).min_abs <= zt_abs) {
      throw DomainError("spectral_flow: eigenvalue pinned at zero on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    }
    if (cur.negatives != prev.negatives) {
      double lo = a;
      double hi = b;
      const long n_lo = prev.negatives;
      while (hi - lo > opts.locate_tol) {
        const double mid = 0.5 * (lo + hi);
        if (sample(family, mid, opts.zero_tol).negatives == n_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const long change = prev.negatives - cur.negatives;
      const int dir = change > 0 ? 1 : -1;
      for (long r = 0; r < std::abs(change); ++r) result.crossings.push_back({0.5 * (lo + hi), dir});
      result.flow += change;
    }
    prev = std::move(cur);
  }
  // Untruncated families compare directly; truncated models (whose end
  // spectra differ at the cut) fall back to the edge-excluded comparison.
  bool same = first.values.size() == prev.values.size();
  for (std::size_t i = 0; same && i < first.values.size(); ++i)
    same = std::abs(first.values[i] - prev.values[i]) <= 1e-8;
  if (!same) {
    const auto s0 = SpectrumSample::from_values(first.values, 0);
    const auto s1 = SpectrumSample::from_values(prev.values, 0);
    same = spectral_distance(s0, s1, 1e-8) <= 1e-8;
  }
  result.endpoints_isospectral = same;
  return result;
}

}  // namespace perispec
