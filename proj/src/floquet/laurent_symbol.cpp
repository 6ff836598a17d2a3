#include "perispec/floquet/laurent_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "perispec/error.hpp"

namespace perispec {

LaurentSymbol::LaurentSymbol(std::size_t block_size, std::map<int, ComplexMatrix> coeffs)
    : block_(block_size), coeffs_(std::move(coeffs)) {
  if (block_ == 0) throw ContractViolation("LaurentSymbol: block size must be positive");
  bool any_nonzero = false;
  for (const auto& [j, a] : coeffs_) {
    if (a.rows() != block_ || a.cols() != block_) {
      throw ContractViolation("LaurentSymbol: coefficient " + std::to_string(j) +
                              " is not " + std::to_string(block_) + "x" + std::to_string(block_));
    }
    if (!a.all_finite()) throw ContractViolation("LaurentSymbol: non-finite coefficient");
    any_nonzero = any_nonzero || a.max_abs() > 0.0;
    bandwidth_ = std::max(bandwidth_, std::abs(j));
  }
  if (!any_nonzero) throw ContractViolation("LaurentSymbol: every coefficient is zero");
}

LaurentSymbol LaurentSymbol::scalar(const std::map<int, Complex>& coeffs) {
  std::map<int, ComplexMatrix> m;
  for (const auto& [j, a] : coeffs) m.emplace(j, ComplexMatrix{{a}});
  return LaurentSymbol(1, std::move(m));
}

LaurentSymbol LaurentSymbol::from_roots(std::span<const Complex> roots, int shift, Complex leading) {
  std::vector<Complex> poly{leading};  // ascending powers
  for (const Complex& r : roots) {
    std::vector<Complex> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= r * poly[k];
    }
    poly = std::move(next);
  }
  std::map<int, Complex> coeffs;
  for (std::size_t k = 0; k < poly.size(); ++k)
    if (poly[k] != Complex{}) coeffs[static_cast<int>(k) - shift] = poly[k];
  return scalar(coeffs);
}

ComplexMatrix LaurentSymbol::coefficient(int j) const {
  if (auto it = coeffs_.find(j); it != coeffs_.end()) return it->second;
  return ComplexMatrix(block_, block_);
}

bool LaurentSymbol::hermitian_symmetric(double tol) const {
  const double scale = std::max(1.0, [&] {
    double m = 0.0;
    for (const auto& [j, a] : coeffs_) m = std::max(m, a.max_abs());
    return m;
  }());
  for (int j = -bandwidth_; j <= bandwidth_; ++j) {
    const ComplexMatrix diff = coefficient(-j) - coefficient(j).adjoint();
    if (diff.max_abs() > tol * scale) return false;
  }
  return true;
}

double LaurentSymbol::lipschitz_bound() const {
  double l = 0.0;
  for (const auto& [j, a] : coeffs_) l += std::abs(j) * a.norm_fro();
  return l;
}

LaurentSymbol direct_sum(const LaurentSymbol& a, const LaurentSymbol& b) {
  std::map<int, ComplexMatrix> coeffs;
  const int lo = std::min(a.min_power(), b.min_power());
  const int hi = std::max(a.max_power(), b.max_power());
  for (int j = lo; j <= hi; ++j) {
    const bool in_a = a.coefficients().contains(j);
    const bool in_b = b.coefficients().contains(j);
    if (!in_a && !in_b) continue;
    coeffs.emplace(j, direct_sum(a.coefficient(j), b.coefficient(j)));
  }
  return LaurentSymbol(a.block_size() + b.block_size(), std::move(coeffs));
}

LaurentSymbol with_mass(const LaurentSymbol& s, double mass) {
  const std::size_t n = s.block_size();
  std::map<int, ComplexMatrix> coeffs;
  const int lo = std::min(s.min_power(), 0);
  const int hi = std::max(s.max_power(), 0);
  for (int j = lo; j <= hi; ++j) {
    ComplexMatrix block(2 * n, 2 * n);
    const ComplexMatrix a = s.coefficient(j);
    block.set_block(0, n, a);
    block.set_block(n, 0, a);
    if (j == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        block(i, i) = mass;
        block(n + i, n + i) = -mass;
      }
    }
    coeffs.emplace(j, std::move(block));
  }
  return LaurentSymbol(2 * n, std::move(coeffs));
}

}  // namespace perispec
