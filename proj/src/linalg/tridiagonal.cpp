#include "perispec/linalg/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perispec/error.hpp"

namespace perispec {

namespace {

struct Reflector {
  std::vector<Complex> v;
  double tau = 0.0;   // H = I − τ·v·v*, Hermitian and unitary
  double alpha = 0.0; // |(H·x)_0| = ‖x‖
};

Reflector make_reflector(std::vector<Complex> x) {
  Reflector r;
  double scale = 0.0;
  for (const auto& z : x) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) {
    r.v = std::move(x);
    return r;
  }
  double ss = 0.0;
  for (const auto& z : x) ss += std::norm(z / scale);
  r.alpha = scale * std::sqrt(ss);
  const double a0 = std::abs(x[0]);
  const Complex phase = a0 > 0.0 ? x[0] / a0 : Complex(1.0);
  const Complex beta = -phase * r.alpha;
  const double tail = std::max(0.0, r.alpha * r.alpha - a0 * a0);
  x[0] -= beta;
  r.tau = 2.0 / (std::norm(x[0]) + tail);
  r.v = std::move(x);
  return r;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> off) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (off.size() + 1 != n) throw ContractViolation("tridiagonal_eigenvalues: off-diagonal size");
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw DomainError("tridiagonal_eigenvalues: QL did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

Bidiagonal householder_bidiagonalize(const ComplexMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows < cols) throw ContractViolation("householder_bidiagonalize: need rows >= cols");
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * cols + j]; };

  Bidiagonal out;
  out.diag.resize(cols);
  out.super.resize(cols > 0 ? cols - 1 : 0);
  std::vector<Complex> w(cols);
  std::vector<Complex> x;

  for (std::size_t k = 0; k < cols; ++k) {
    x.assign(rows - k, 0.0);
    for (std::size_t i = k; i < rows; ++i) x[i - k] = at(i, k);
    const Reflector left = make_reflector(x);
    out.diag[k] = left.alpha;
    if (left.tau != 0.0) {
      std::fill(w.begin() + k, w.end(), Complex(0.0));
      for (std::size_t i = k; i < rows; ++i) {
        const Complex vi = std::conj(left.v[i - k]);
        const Complex* row = &at(i, 0);
        for (std::size_t j = k; j < cols; ++j) w[j] += vi * row[j];
      }
      for (std::size_t i = k; i < rows; ++i) {
        const Complex vi = left.tau * left.v[i - k];
        Complex* row = &at(i, 0);
        for (std::size_t j = k; j < cols; ++j) row[j] -= vi * w[j];
      }
    }
    if (k + 1 >= cols) continue;

    // Right reflector from the conjugated row k, so that row·H = (H·row*)*.
    x.assign(cols - k - 1, 0.0);
    for (std::size_t j = k + 1; j < cols; ++j) x[j - k - 1] = std::conj(at(k, j));
    const Reflector right = make_reflector(x);
    out.super[k] = right.alpha;
    if (right.tau == 0.0) continue;
    for (std::size_t i = k + 1; i < rows; ++i) {
      Complex* row = &at(i, 0);
      Complex y = 0.0;
      for (std::size_t j = k + 1; j < cols; ++j) y += row[j] * right.v[j - k - 1];
      y *= right.tau;
      for (std::size_t j = k + 1; j < cols; ++j) row[j] -= y * std::conj(right.v[j - k - 1]);
    }
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> householder_tridiagonalize(const ComplexMatrix& m) {
  if (!m.is_square()) throw ContractViolation("householder_tridiagonalize: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
  std::vector<Complex> x, w(n), q(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    x.assign(n - k - 1, 0.0);
    for (std::size_t i = k + 1; i < n; ++i) x[i - k - 1] = at(i, k);
    const Reflector h = make_reflector(x);
    off[k] = h.alpha;
    diag[k] = at(k, k).real();
    if (h.tau == 0.0) continue;
    const std::size_t base = k + 1;
    const std::size_t len = n - base;
    // w = τ·A₂₂·v,  q = w − (τ/2)(v*w)·v,  A₂₂ ← A₂₂ − v·q* − q·v*
    Complex vw = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const Complex* row = &at(base + i, base);
      Complex acc = 0.0;
      for (std::size_t j = 0; j < len; ++j) acc += row[j] * h.v[j];
      w[i] = h.tau * acc;
      vw += std::conj(h.v[i]) * w[i];
    }
    const Complex kk = 0.5 * h.tau * vw;
    for (std::size_t i = 0; i < len; ++i) q[i] = w[i] - kk * h.v[i];
    for (std::size_t i = 0; i < len; ++i) {
      Complex* row = &at(base + i, base);
      const Complex vi = h.v[i], qi = q[i];
      for (std::size_t j = 0; j < len; ++j) row[j] -= vi * std::conj(q[j]) + qi * std::conj(h.v[j]);
    }
  }
  if (n > 0) diag[n - 1] = at(n - 1, n - 1).real();
  return {diag, off};
}

}  // namespace perispec
