#include "perispec/discretize/circle_dirac.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "perispec/conventions.hpp"
#include "perispec/error.hpp"

namespace perispec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Grid modes κ: n consecutive values, half-integers for the antiperiodic
// (bounding) structure and integers for the periodic one.
std::vector<double> grid_modes(std::size_t n, SpinStructure spin) {
  std::vector<double> kappa(n);
  const double half = static_cast<double>(n) / 2.0;
  for (std::size_t k = 0; k < n; ++k) {
    kappa[k] = spin == SpinStructure::Bounding ? -half + 0.5 + static_cast<double>(k)
                                               : -half + static_cast<double>(k);
  }
  return kappa;
}

// F* diag(λ) F with F_{κj} = e^{−iκθ_j}/√n. Phases are reduced exactly:
// 2κ(j−l) is an integer, so e^{iκ(θ_j−θ_l)} = e^{iπ·m/n} with m mod 2n.
ComplexMatrix fourier_synthesis(std::size_t n, const std::vector<double>& kappa,
                                const std::vector<Complex>& lambda) {
  const long two_n = static_cast<long>(2 * n);
  std::vector<Complex> roots(two_n);
  for (long m = 0; m < two_n; ++m) roots[m] = std::polar(1.0, kPi * static_cast<double>(m) / static_cast<double>(n));
  std::vector<long> twice_kappa(n);
  for (std::size_t k = 0; k < n; ++k) twice_kappa[k] = std::lround(2.0 * kappa[k]);

  ComplexMatrix out(n, n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      const long diff = static_cast<long>(j) - static_cast<long>(l);
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) {
        long m = (twice_kappa[k] * diff) % two_n;
        if (m < 0) m += two_n;
        s += lambda[k] * roots[m];
      }
      out(j, l) = s * inv_n;
    }
  }
  return out;
}

ComplexMatrix massive_doubling(const ComplexMatrix& core, double mass) {
  if (mass == 0.0) return core;
  const std::size_t n = core.rows();
  ComplexMatrix out(2 * n, 2 * n);
  out.set_block(0, n, core);
  out.set_block(n, 0, core);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = mass;
    out(n + i, n + i) = -mass;
  }
  return out;
}

double seam_sign(SpinStructure spin) { return spin == SpinStructure::Bounding ? -1.0 : 1.0; }

void require_central_difference(const DiscreteDirac& d, const char* op) {
  if (d.scheme != Scheme::CentralDifference) {
    throw ContractViolation(std::string(op) +
                            ": the spectral model is nonlocal on the cover; use CentralDifference");
  }
}

}  // namespace

WeightFunction::WeightFunction(std::vector<double> values, int degree)
    : values_(std::move(values)), degree_(degree) {
  if (values_.empty()) throw ContractViolation("WeightFunction: no samples");
  for (double v : values_)
    if (!std::isfinite(v)) throw ContractViolation("WeightFunction: non-finite sample");
}

WeightFunction WeightFunction::linear(std::size_t n, int degree) {
  return with_periodic_part(n, degree, [](double) { return 0.0; });
}

double WeightFunction::at(long j) const {
  const long n = static_cast<long>(values_.size());
  long q = j / n;
  long r = j % n;
  if (r < 0) {
    r += n;
    q -= 1;
  }
  return values_[static_cast<std::size_t>(r)] + static_cast<double>(degree_) * static_cast<double>(q);
}

std::vector<double> grid_angles(std::size_t n) {
  std::vector<double> theta(n);
  for (std::size_t j = 0; j < n; ++j) theta[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
  return theta;
}

Complex twist_to_z(double c) { return std::polar(1.0, -2.0 * kPi * c); }

DiscreteDirac build_circle_dirac(std::size_t n, Scheme scheme, SpinStructure spin, TwistParameter c,
                                 double mass) {
  if (n < 8 || n % 2 != 0) {
    throw ContractViolation("build_circle_dirac: grid size must be even and at least 8, got " +
                            std::to_string(n));
  }
  if (!std::isfinite(mass)) throw ContractViolation("build_circle_dirac: non-finite mass");
  DiscreteDirac d;
  d.n = n;
  d.scheme = scheme;
  d.spin = spin;
  d.c = c.value();
  d.mass = mass;
  const double shift = conventions::kCliffordSign * c.value();

  if (scheme == Scheme::Spectral) {
    const auto kappa = grid_modes(n, spin);
    std::vector<Complex> lambda(n);
    for (std::size_t k = 0; k < n; ++k) lambda[k] = -kappa[k] + shift;
    d.core = fourier_synthesis(n, kappa, lambda);
  } else {
    const double h = 2.0 * kPi / static_cast<double>(n);
    const Complex hop = kI / (2.0 * h);
    d.core = ComplexMatrix(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      d.core(j, j + 1) = hop;
      d.core(j + 1, j) = std::conj(hop);
    }
    const double sigma = seam_sign(spin);
    d.core(n - 1, 0) = sigma * hop;
    d.core(0, n - 1) = sigma * std::conj(hop);
    for (std::size_t j = 0; j < n; ++j) d.core(j, j) = shift;
  }
  d.matrix = massive_doubling(d.core, mass);
  return d;
}

ComplexMatrix gauge_conjugate(const DiscreteDirac& d, const WeightFunction& u, double c) {
  if (u.degree() != 0) {
    throw ContractViolation("gauge_conjugate: weight has degree " + std::to_string(u.degree()) +
                            "; e^{icu} would be multivalued");
  }
  if (u.size() != d.n) throw ContractViolation("gauge_conjugate: weight and grid sizes differ");
  std::vector<Complex> left(d.n), right(d.n);
  for (std::size_t j = 0; j < d.n; ++j) {
    right[j] = std::polar(1.0, c * u.values()[j]);
    left[j] = std::conj(right[j]);
  }
  if (d.mass != 0.0) {
    left.insert(left.end(), left.begin(), left.end());
    right.insert(right.end(), right.begin(), right.end());
  }
  return scale_rows_cols(d.matrix, left, right);
}

FourierLaplaceOperator fourier_laplace_family(const DiscreteDirac& d, const WeightFunction& f,
                                              Complex z, int branch) {
  if (z == Complex{}) throw ContractViolation("fourier_laplace_family: z = 0");
  if (f.degree() != 1) throw ContractViolation("fourier_laplace_family: lift must have degree 1");
  if (f.size() != d.n) throw ContractViolation("fourier_laplace_family: weight and grid sizes differ");
  if (d.c != 0.0) throw ContractViolation("fourier_laplace_family: operator must be untwisted");

  FourierLaplaceOperator out;
  out.branch = branch;
  out.log_z = std::log(z) + Complex(0.0, 2.0 * kPi * branch);
  const std::size_t n = d.n;

  ComplexMatrix core;
  if (d.scheme == Scheme::Spectral) {
    // On quasi-periodic data with multiplier z^{-1} per period the cover
    // operator acts on Bloch modes e^{i(κ+ν)θ}, ν = i·ln z/(2π). The linear
    // part of f̃ turns this into −(κ+ν) on periodic modes; the periodic part
    // p_j = f̃_j − j/n enters as a single-valued diagonal similarity.
    const Complex nu = kI * out.log_z / (2.0 * kPi);
    const auto kappa = grid_modes(n, d.spin);
    std::vector<Complex> lambda(n);
    for (std::size_t k = 0; k < n; ++k) lambda[k] = -(kappa[k] + nu);
    core = fourier_synthesis(n, kappa, lambda);
    std::vector<Complex> left(n), right(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double p = f.values()[j] - static_cast<double>(j) / static_cast<double>(n);
      left[j] = std::exp(p * out.log_z);
      right[j] = std::exp(-p * out.log_z);
    }
    core = scale_rows_cols(core, left, right);
  } else {
    // Banded: each entry (j, l) couples to the nearest cover copy of site l.
    core = d.core;
    const long ln = static_cast<long>(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        if (core(j, l) == Complex{} || j == l) continue;
        long lift = static_cast<long>(l);
        const long gap = static_cast<long>(l) - static_cast<long>(j);
        if (gap < -ln / 2) lift += ln;
        if (gap > ln / 2) lift -= ln;
        const double df = f.at(static_cast<long>(j)) - f.at(lift);
        core(j, l) *= std::exp(df * out.log_z);
      }
    }
  }
  out.matrix = massive_doubling(core, d.mass);
  return out;
}

LaurentSymbol fourier_laplace_symbol(const DiscreteDirac& d) {
  require_central_difference(d, "fourier_laplace_symbol");
  const std::size_t n = d.n;
  ComplexMatrix a0 = d.core;
  ComplexMatrix forward(n, n), backward(n, n);
  // Seam hop from site n−1 into the next copy of site 0 carries z^{−1}.
  backward(n - 1, 0) = a0(n - 1, 0);
  forward(0, n - 1) = a0(0, n - 1);
  a0(n - 1, 0) = 0.0;
  a0(0, n - 1) = 0.0;
  LaurentSymbol s(n, {{-1, backward}, {0, a0}, {1, forward}});
  return d.mass != 0.0 ? with_mass(s, d.mass) : s;
}

ComplexMatrix cover_operator_sections(const DiscreteDirac& d, std::size_t periods) {
  require_central_difference(d, "cover_operator_sections");
  if (periods < 1) throw ContractViolation("cover_operator_sections: need at least one period");
  const std::size_t n = d.n;
  const std::size_t total = n * periods;
  ComplexMatrix line(total, total);
  const Complex seam = d.core(n - 1, 0);
  for (std::size_t p = 0; p < periods; ++p) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const bool wrap = (j == n - 1 && l == 0) || (j == 0 && l == n - 1);
        if (!wrap) line(p * n + j, p * n + l) = d.core(j, l);
      }
    if (p + 1 < periods) {
      line(p * n + n - 1, (p + 1) * n) = seam;
      line((p + 1) * n, p * n + n - 1) = std::conj(seam);
    }
  }
  return massive_doubling(line, d.mass);
}

}  // namespace perispec
