#include "perispec/floquet/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "perispec/error.hpp"
#include "perispec/linalg/svd.hpp"

namespace perispec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sigma_at(const LaurentSymbol& s, double theta) {
  return min_singular_value(symbol_eval(s, std::polar(1.0, theta)));
}

// Golden-section search for a minimum of f on [a, b].
std::pair<double, double> golden_min(const LaurentSymbol& s, double a, double b, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a);
  double x2 = a + g * (b - a);
  double f1 = sigma_at(s, x1);
  double f2 = sigma_at(s, x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = sigma_at(s, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = sigma_at(s, x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

double wrap_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  return theta < 0.0 ? theta + kTwoPi : theta;
}

}  // namespace

ComplexMatrix symbol_eval(const LaurentSymbol& s, Complex z) {
  if (z == Complex{}) throw ContractViolation("symbol_eval: z = 0");
  ComplexMatrix out(s.block_size(), s.block_size());
  for (const auto& [j, a] : s.coefficients()) out += a * std::pow(z, j);
  return out;
}

CircleMinimum min_singular_on_circle(const LaurentSymbol& s, int grid, double refine_tol) {
  if (grid < 16) throw ContractViolation("min_singular_on_circle: grid must be at least 16");
  if (!(refine_tol > 0.0)) throw ContractViolation("min_singular_on_circle: refine_tol must be positive");
  const double step = kTwoPi / grid;
  std::vector<std::pair<double, int>> samples(grid);
  for (int k = 0; k < grid; ++k) samples[k] = {sigma_at(s, k * step), k};
  std::partial_sort(samples.begin(), samples.begin() + 3, samples.end());

  CircleMinimum best{samples.front().first, samples.front().second * step, {}};
  for (int r = 0; r < 3; ++r) {
    const double centre = samples[r].second * step;
    const auto [theta, value] = golden_min(s, centre - step, centre + step, refine_tol);
    if (value < best.value) best = {value, wrap_angle(theta), {}};
  }
  best.z = std::polar(1.0, best.theta);
  return best;
}

FredholmReport is_fredholm(const LaurentSymbol& s, double tol, int grid) {
  if (!(tol > 0.0)) throw ContractViolation("is_fredholm: tol must be positive");
  FredholmReport report;
  report.grid_used = grid;
  report.tol = tol;
  const CircleMinimum m = min_singular_on_circle(s, grid);
  report.min_singular = m.value;
  report.witness = m;
  report.is_fredholm = m.value > tol;
  if (report.is_fredholm && s.block_size() * static_cast<std::size_t>(std::max(s.bandwidth(), 1)) <= 64) {
    report.index = conventions::kIndexSign * winding_number(s);
  }
  return report;
}

long winding_number(const LaurentSymbol& s) {
  auto det_at = [&](double theta) { return determinant(symbol_eval(s, std::polar(1.0, theta))); };
  constexpr int kInitial = 256;
  constexpr int kMaxDepth = 40;
  const double quarter = std::numbers::pi / 2.0;

  double total = 0.0;
  // Explicit stack of (θa, θb, det(a), det(b), depth).
  struct Seg {
    double a, b;
    Complex da, db;
    int depth;
  };
  std::vector<Seg> stack;
  Complex prev = det_at(0.0);
  if (prev == Complex{}) throw DomainError("winding_number: det A vanishes on the circle");
  for (int k = 0; k < kInitial; ++k) {
    const double a = kTwoPi * k / kInitial;
    const double b = kTwoPi * (k + 1) / kInitial;
    const Complex db = det_at(b);
    stack.push_back({a, b, prev, db, 0});
    prev = db;
    while (!stack.empty()) {
      Seg seg = stack.back();
      stack.pop_back();
      if (seg.db == Complex{}) throw DomainError("winding_number: det A vanishes on the circle");
      const double delta = std::arg(seg.db / seg.da);
      if (std::abs(delta) < quarter || seg.depth >= kMaxDepth) {
        total += delta;
        continue;
      }
      const double mid = 0.5 * (seg.a + seg.b);
      const Complex dm = det_at(mid);
      // Push the right half first so the left half is processed first.
      stack.push_back({mid, seg.b, dm, seg.db, seg.depth + 1});
      stack.push_back({seg.a, mid, seg.da, dm, seg.depth + 1});
    }
  }
  return std::lround(total / kTwoPi);
}

long toeplitz_index(const LaurentSymbol& s) {
  const FredholmReport r = is_fredholm(s);
  if (!r.is_fredholm) {
    throw DomainError("toeplitz_index: symbol is not invertible on the unit circle (min sigma " +
                      std::to_string(r.min_singular) + ")");
  }
  return conventions::kIndexSign * winding_number(s);
}

ComplexMatrix finite_section(const LaurentSymbol& s, std::size_t periods) {
  const auto d = static_cast<std::size_t>(s.bandwidth());
  if (periods < 2 * d + 1) {
    throw ContractViolation("finite_section: need at least 2d+1 = " + std::to_string(2 * d + 1) +
                            " periods");
  }
  const std::size_t nb = s.block_size();
  ComplexMatrix out(periods * nb, periods * nb);
  for (std::size_t i = 0; i < periods; ++i) {
    for (const auto& [j, a] : s.coefficients()) {
      const long col = static_cast<long>(i) + j;
      if (col < 0 || col >= static_cast<long>(periods)) continue;
      out.set_block(i * nb, static_cast<std::size_t>(col) * nb, a);
    }
  }
  return out;
}

std::string to_string(SectionVerdict v) {
  switch (v) {
    case SectionVerdict::Stable:
      return "stable";
    case SectionVerdict::Decaying:
      return "decaying";
    case SectionVerdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

SectionReport fredholm_via_sections(const LaurentSymbol& s, const std::vector<std::size_t>& sizes,
                                    double tol) {
  if (sizes.size() < 2) throw ContractViolation("fredholm_via_sections: need at least two sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
    throw ContractViolation("fredholm_via_sections: sizes must be strictly ascending");
  }
  SectionReport report;
  report.sizes = sizes;
  for (std::size_t n : sizes) report.sigma_min.push_back(min_singular_value(finite_section(s, n)));

  const auto& v = report.sigma_min;
  const double last = v.back();
  const double prev = v[v.size() - 2];
  const bool decreasing = std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  if (last > tol && prev > tol && std::abs(last - prev) < 0.2 * std::max(last, prev)) {
    report.verdict = SectionVerdict::Stable;
  } else if (decreasing && last < 0.5 * v.front()) {
    report.verdict = SectionVerdict::Decaying;
  } else {
    report.verdict = SectionVerdict::Inconclusive;
  }
  return report;
}

}  // namespace perispec
