#include "perispec/spectra/model_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "perispec/conventions.hpp"
#include "perispec/error.hpp"

namespace perispec {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw DomainError("sphere_spectrum: multiplicity overflows 64 bits");
    }
    r = r * num / i;  // exact: r·num is divisible by i at every step
  }
  return r;
}

std::vector<double> trimmed(const SpectrumSample& s) {
  auto v = s.expanded();
  if (v.size() <= 4) return {};
  return {v.begin() + 2, v.end() - 2};
}

}  // namespace

TwistParameter::TwistParameter(double c) : c_(c) {
  if (!std::isfinite(c)) throw ContractViolation("TwistParameter: c must be finite");
}

SpectrumSample circle_spectrum(SpinStructure spin, TwistParameter c, std::size_t band) {
  if (band < 1) throw ContractViolation("circle_spectrum: band must be at least 1");
  const double offset = spin == SpinStructure::Bounding ? 0.5 : 0.0;
  const double shift = conventions::kCliffordSign * c.value();
  std::vector<double> values;
  const auto b = static_cast<long>(band);
  for (long k = -b - 1; k <= b; ++k) {
    const double kappa = static_cast<double>(k) + offset;
    if (std::abs(kappa) <= static_cast<double>(band)) values.push_back(kappa + shift);
  }
  return SpectrumSample::from_values(std::move(values), band);
}

SpectrumSample sphere_spectrum(std::size_t ell, std::size_t kmax) {
  if (ell == 0) throw ContractViolation("sphere_spectrum: dimension must be at least 1");
  const std::uint64_t spinor_rank = std::uint64_t{1} << (ell / 2);
  std::vector<SpectralPair> pairs;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const double lambda = static_cast<double>(ell) / 2.0 + static_cast<double>(k);
    const std::uint64_t mult = spinor_rank * binomial(k + ell - 1, k);
    pairs.push_back({lambda, static_cast<std::size_t>(mult)});
    pairs.push_back({-lambda, static_cast<std::size_t>(mult)});
  }
  return SpectrumSample::from_pairs(std::move(pairs), kmax, conventions::kGroupingTol, true);
}

SpectrumSample product_square_spectrum(const SpectrumSample& base, const SpectrumSample& sphere,
                                       double cutoff) {
  if (base.empty() || sphere.empty()) {
    throw ContractViolation("product_square_spectrum: empty input spectrum");
  }
  std::vector<SpectralPair> pairs;
  for (const auto& mu : base.pairs()) {
    for (const auto& nu : sphere.pairs()) {
      const double sq = mu.value * mu.value + nu.value * nu.value;
      if (sq <= cutoff) pairs.push_back({sq, mu.multiplicity * nu.multiplicity});
    }
  }
  if (pairs.empty()) throw ContractViolation("product_square_spectrum: cutoff removes every value");
  return SpectrumSample::from_pairs(std::move(pairs), std::min(base.band(), sphere.band()),
                                    base.grouping_tol());
}

SpectrumSample model_spectrum(const ModelManifold& model, double c, std::size_t band,
                              double cutoff) {
  struct Visitor {
    double c;
    std::size_t band;
    double cutoff;
    SpectrumSample operator()(const CircleModel& m) const {
      return circle_spectrum(m.spin, TwistParameter(c), band);
    }
    SpectrumSample operator()(const SphereModel& m) const {
      return sphere_spectrum(m.dimension, band);
    }
    SpectrumSample operator()(const ProductWithSphere& m) const {
      return product_square_spectrum(m.base_spectrum, sphere_spectrum(m.sphere_dimension, band),
                                     cutoff);
    }
  };
  return std::visit(Visitor{c, band, cutoff}, model);
}

double spectral_distance(const SpectrumSample& a, const SpectrumSample& b, double tol) {
  const auto ta = trimmed(a);
  const auto tb = trimmed(b);
  const double inf = std::numeric_limits<double>::infinity();
  if (ta.empty() || tb.empty()) return inf;
  double lo = std::max(ta.front(), tb.front());
  double hi = std::min(ta.back(), tb.back());
  const std::size_t band = std::min(a.band(), b.band());
  if (band > 2) {
    const double limit = static_cast<double>(band) - 2.0;
    lo = std::max(lo, -limit);
    hi = std::min(hi, limit);
  }
  if (lo > hi) return inf;
  auto window = [&](const std::vector<double>& v) {
    std::vector<double> w;
    for (double x : v)
      if (x >= lo - tol && x <= hi + tol) w.push_back(x);
    return w;
  };
  const auto wa = window(ta);
  const auto wb = window(tb);
  if (wa.empty() || wa.size() != wb.size()) return inf;
  double worst = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) worst = std::max(worst, std::abs(wa[i] - wb[i]));
  return worst;
}

bool check_twist_periodicity(const SpectrumFamily& spectra, double c, double tol) {
  return spectral_distance(spectra(c), spectra(c + 1.0), tol) <= tol;
}

bool check_exact_twist_invariance(const SpectrumFamily& spectra, double c, double tol) {
  return spectral_distance(spectra(c), spectra(0.0), tol) <= tol;
}

bool lichnerowicz_bound_check(const SpectrumSample& spectrum_sq, double kappa_min, double tol) {
  if (spectrum_sq.empty()) throw ContractViolation("lichnerowicz_bound_check: empty spectrum");
  if (spectrum_sq.min() < -tol) {
    throw ContractViolation("lichnerowicz_bound_check: squared spectrum has negative entry " +
                            std::to_string(spectrum_sq.min()));
  }
  return spectrum_sq.min() >= kappa_min / 4.0 - tol;
}

SpectrumFamily circle_family(SpinStructure spin, std::size_t band) {
  return [spin, band](double c) { return circle_spectrum(spin, TwistParameter(c), band); };
}

}  // namespace perispec
