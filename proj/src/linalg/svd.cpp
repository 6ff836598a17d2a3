#include "perispec/linalg/svd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "perispec/error.hpp"
#include "perispec/linalg/eigen.hpp"
#include "perispec/linalg/tridiagonal.hpp"

namespace perispec {

namespace {

// One-sided Jacobi on columns held as split real/imaginary rows:
// column j of B is (re[j·len ..], im[j·len ..]).
void one_sided_jacobi(std::vector<double>& re, std::vector<double>& im, std::size_t k,
                      std::size_t len) {
  const double eps = std::numeric_limits<double>::epsilon();
  for (int pass = 0; pass < 8; ++pass) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        double* __restrict ir = re.data() + i * len;
        double* __restrict ii = im.data() + i * len;
        double* __restrict jr = re.data() + j * len;
        double* __restrict ji = im.data() + j * len;
        double alpha = 0.0, beta = 0.0, gr = 0.0, gi = 0.0;
        for (std::size_t r = 0; r < len; ++r) {
          alpha += ir[r] * ir[r] + ii[r] * ii[r];
          beta += jr[r] * jr[r] + ji[r] * ji[r];
          // conj(b_i)·b_j
          gr += ir[r] * jr[r] + ii[r] * ji[r];
          gi += ir[r] * ji[r] - ii[r] * jr[r];
        }
        const double g = std::hypot(gr, gi);
        if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // b_i ← c·b_i − s·e^{−iφ}·b_j,  b_j ← s·b_i + c·e^{−iφ}·b_j
        const double er = gr / g;
        const double ei = -gi / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t r = 0; r < len; ++r) {
          const double xr = ir[r], xi = ii[r];
          const double zr = er * jr[r] - ei * ji[r];
          const double zi = er * ji[r] + ei * jr[r];
          ir[r] = c * xr - s * zr;
          ii[r] = c * xi - s * zi;
          jr[r] = s * xr + c * zr;
          ji[r] = s * xi + c * zi;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& input) {
  if (input.empty()) throw ContractViolation("singular_values: empty matrix");
  if (!input.all_finite()) throw ContractViolation("singular_values: non-finite entry");
  const ComplexMatrix m = input.rows() < input.cols() ? input.adjoint() : input;
  const std::size_t n = m.cols();
  const double scale = m.max_abs();
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  // Gram matrix G = M*M, made exactly Hermitian.
  ComplexMatrix gram(n, n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex ci = std::conj(row[i]);
      if (ci == Complex{}) continue;
      auto grow = gram.row(i);
      for (std::size_t j = i; j < n; ++j) grow[j] += ci * row[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, i) = gram(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) gram(j, i) = std::conj(gram(i, j));
  }
  const EigenSystem sys = hermitian_eigensystem(gram, 1e-6);

  // B = M V, stored column-wise, then re-orthogonalized.
  const std::size_t len = m.rows();
  const ComplexMatrix vt = sys.vectors.transpose();  // row j = column j of V
  std::vector<double> bre(n * len, 0.0);
  std::vector<double> bim(n * len, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    auto vj = vt.row(j);
    for (std::size_t r = 0; r < len; ++r) {
      Complex acc{};
      auto row = m.row(r);
      for (std::size_t k = 0; k < n; ++k) acc += row[k] * vj[k];
      bre[j * len + r] = acc.real();
      bim[j * len + r] = acc.imag();
    }
  }
  one_sided_jacobi(bre, bim, n, len);

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < len; ++r) {
      s += bre[j * len + r] * bre[j * len + r] + bim[j * len + r] * bim[j * len + r];
    }
    sigma[j] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

std::vector<double> singular_values_fast(const ComplexMatrix& m) {
  if (m.empty()) throw ContractViolation("singular_values_fast: empty matrix");
  if (!m.all_finite()) throw ContractViolation("singular_values_fast: non-finite entry");
  const Bidiagonal b = householder_bidiagonalize(m.rows() >= m.cols() ? m : m.adjoint());
  // Golub–Kahan form: zero diagonal, off-diagonal d1, e1, d2, e2, ..., dk.
  const std::size_t k = b.diag.size();
  std::vector<double> off;
  off.reserve(2 * k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    off.push_back(b.diag[i]);
    if (i + 1 < k) off.push_back(b.super[i]);
  }
  const auto ev = tridiagonal_eigenvalues(std::vector<double>(2 * k, 0.0), off);
  std::vector<double> sigma(ev.rbegin(), ev.rbegin() + static_cast<long>(k));
  for (auto& s : sigma) s = std::max(s, 0.0);
  return sigma;
}

namespace {
std::vector<double> singular_values_auto(const ComplexMatrix& m) {
  return std::min(m.rows(), m.cols()) > kFastSvdThreshold ? singular_values_fast(m) : singular_values(m);
}
}  // namespace

double min_singular_value(const ComplexMatrix& m) {
  if (m.empty()) throw ContractViolation("min_singular_value: empty matrix");
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  return singular_values_auto(m).back();
}

std::size_t numeric_kernel_dim(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw ContractViolation("numeric_kernel_dim: tol must be positive");
  const auto sigma = singular_values_auto(m);
  const double top = sigma.front() > 0.0 ? sigma.front() : 1.0;
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s < tol * top; }));
}

}  // namespace perispec
