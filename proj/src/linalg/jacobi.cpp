#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "perispec/error.hpp"
#include "perispec/linalg/eigen.hpp"
#include "perispec/linalg/tridiagonal.hpp"

namespace perispec {

namespace {

constexpr int kMaxSweeps = 60;

void check_hermitian(const ComplexMatrix& m, double tol) {
  if (m.empty()) throw ContractViolation("hermitian eigensolver: empty matrix");
  if (!m.is_square()) throw ContractViolation("hermitian eigensolver: matrix is not square");
  if (!m.all_finite()) throw ContractViolation("hermitian eigensolver: non-finite entry");
  const double scale = std::max(m.norm_fro(), 1e-300);
  if (m.hermitian_defect() > tol * scale) {
    throw ContractViolation("hermitian eigensolver: matrix is not Hermitian within tolerance");
  }
}

struct JacobiOutput {
  std::vector<double> values;  // unsorted, diagonal of the rotated matrix
  ComplexMatrix vt;            // row i = conj of eigenvector i
};

// Split storage so the row loops vectorize. `im` stays empty for real input,
// which then runs the real symmetric rotation only.
struct Planes {
  std::size_t n = 0;
  std::vector<double> re;
  std::vector<double> im;
  bool real() const { return im.empty(); }
};

Planes split(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  Planes w;
  w.n = n;
  w.re.resize(n * n);
  bool is_real = true;
  for (const auto& z : m.entries()) {
    if (z.imag() != 0.0) {
      is_real = false;
      break;
    }
  }
  if (!is_real) w.im.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    w.re[i * n + i] = m(i, i).real();
    if (!is_real) w.im[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      w.re[i * n + j] = w.re[j * n + i] = avg.real();
      if (!is_real) {
        w.im[i * n + j] = avg.imag();
        w.im[j * n + i] = -avg.imag();
      }
    }
  }
  return w;
}

struct Rotation {
  std::size_t p, q;
  double c, s;    // real rotation
  double er, ei;  // phase e^{iφ} of the (p,q) entry
};

// Round-robin pairing for step `step` of a sweep over m = n + (n odd) slots;
// index m − 1 stays fixed while the others cycle. Pairs touching the dummy
// slot n (odd n) are dropped.
void round_robin(std::size_t n, std::size_t step, std::vector<std::pair<std::size_t, std::size_t>>& out) {
  const std::size_t m = n + (n % 2);
  out.clear();
  auto slot = [&](std::size_t i) { return i == m - 1 ? m - 1 : (i + step) % (m - 1); };
  for (std::size_t i = 0; i < m / 2; ++i) {
    std::size_t a = slot(i);
    std::size_t b = slot(m - 1 - i);
    if (a > b) std::swap(a, b);
    if (b < n) out.emplace_back(a, b);
  }
}

// Left action U* on rows p, q: p' = c·p − s·e^{iφ}·q, q' = s·p + c·e^{iφ}·q.
void rotate_rows(Planes& w, const Rotation& r) {
  const std::size_t n = w.n;
  double* __restrict pr = w.re.data() + r.p * n;
  double* __restrict qr = w.re.data() + r.q * n;
  if (w.real()) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = pr[k];
      const double z = r.er * qr[k];
      pr[k] = r.c * x - r.s * z;
      qr[k] = r.s * x + r.c * z;
    }
    return;
  }
  double* __restrict pi = w.im.data() + r.p * n;
  double* __restrict qi = w.im.data() + r.q * n;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = pr[k], xi = pi[k], yr = qr[k], yi = qi[k];
    const double zr = r.er * yr - r.ei * yi;
    const double zi = r.er * yi + r.ei * yr;
    pr[k] = r.c * xr - r.s * zr;
    pi[k] = r.c * xi - r.s * zi;
    qr[k] = r.s * xr + r.c * zr;
    qi[k] = r.s * xi + r.c * zi;
  }
}

// Right action U on columns p, q of every row: p' = c·p − s·e^{−iφ}·q,
// q' = s·p + c·e^{−iφ}·q.
void rotate_cols(Planes& w, const std::vector<Rotation>& rots) {
  const std::size_t n = w.n;
  for (std::size_t k = 0; k < n; ++k) {
    double* __restrict rr = w.re.data() + k * n;
    if (w.real()) {
      for (const auto& r : rots) {
        const double x = rr[r.p];
        const double z = r.er * rr[r.q];
        rr[r.p] = r.c * x - r.s * z;
        rr[r.q] = r.s * x + r.c * z;
      }
      continue;
    }
    double* __restrict ri = w.im.data() + k * n;
    for (const auto& r : rots) {
      const double xr = rr[r.p], xi = ri[r.p], yr = rr[r.q], yi = ri[r.q];
      const double zr = r.er * yr + r.ei * yi;
      const double zi = r.er * yi - r.ei * yr;
      rr[r.p] = r.c * xr - r.s * zr;
      ri[r.p] = r.c * xi - r.s * zi;
      rr[r.q] = r.s * xr + r.c * zr;
      ri[r.q] = r.s * xi + r.c * zi;
    }
  }
}

// Cyclic Jacobi in round-robin order. Each step applies n/2 disjoint
// rotations at once: U* from the left row by row, then U from the right,
// again row by row, so no pass walks a column. Eigenvectors accumulate as
// rows of `vt` under the same left action.
JacobiOutput jacobi(const ComplexMatrix& input, bool want_vectors) {
  const std::size_t n = input.rows();
  Planes a = split(input);
  const bool real = a.real();
  Planes v;
  if (want_vectors) {
    v.n = n;
    v.re.assign(n * n, 0.0);
    if (!real) v.im.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v.re[i * n + i] = 1.0;
  }
  double* re = a.re.data();
  double* im = real ? nullptr : a.im.data();

  double total = 0.0;
  for (double x : a.re) total += x * x;
  for (double x : a.im) total += x * x;
  total = std::max(std::sqrt(total), 1e-300);
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Rotation> rots;
  const std::size_t steps = n - 1 + (n % 2);
  for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
    // Re-impose exact Hermitian symmetry; the two-sided passes drift by ulps.
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      if (!real) im[p * n + p] = 0.0;
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = 0.5 * (re[p * n + q] + re[q * n + p]);
        re[p * n + q] = re[q * n + p] = r;
        off += r * r;
        if (!real) {
          const double i = 0.5 * (im[p * n + q] - im[q * n + p]);
          im[p * n + q] = i;
          im[q * n + p] = -i;
          off += i * i;
        }
      }
    }
    if (std::sqrt(2.0 * off) <= eps * total) break;

    for (std::size_t step = 0; step < steps; ++step) {
      round_robin(n, step, pairs);
      rots.clear();
      for (const auto& [p, q] : pairs) {
        const double ar = re[p * n + q];
        const double ai = real ? 0.0 : im[p * n + q];
        const double mag = std::hypot(ar, ai);
        if (mag == 0.0) continue;
        const double app = re[p * n + p];
        const double aqq = re[q * n + q];
        if (sweep > 3 && mag <= eps * 1e-2 * std::sqrt(std::abs(app * aqq))) {
          re[p * n + q] = re[q * n + p] = 0.0;
          if (!real) im[p * n + q] = im[q * n + p] = 0.0;
          continue;
        }
        // Phase so the (p,q) entry becomes real, then a real rotation.
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        rots.push_back({p, q, c, t * c, ar / mag, ai / mag});
        // Exact values of the rotated 2×2 block, written after both passes.
        rots.back().c = c;
      }
      if (rots.empty()) continue;
      std::vector<std::pair<double, double>> diag(rots.size());
      for (std::size_t i = 0; i < rots.size(); ++i) {
        const auto& r = rots[i];
        const double mag = std::hypot(re[r.p * n + r.q], real ? 0.0 : im[r.p * n + r.q]);
        const double t = r.s / r.c;
        diag[i] = {re[r.p * n + r.p] - t * mag, re[r.q * n + r.q] + t * mag};
      }
      for (const auto& r : rots) rotate_rows(a, r);
      rotate_cols(a, rots);
      for (std::size_t i = 0; i < rots.size(); ++i) {
        const auto& r = rots[i];
        re[r.p * n + r.p] = diag[i].first;
        re[r.q * n + r.q] = diag[i].second;
        re[r.p * n + r.q] = re[r.q * n + r.p] = 0.0;
        if (!real) {
          im[r.p * n + r.p] = im[r.q * n + r.q] = 0.0;
          im[r.p * n + r.q] = im[r.q * n + r.p] = 0.0;
        }
      }
      if (want_vectors) {
        for (const auto& r : rots) rotate_rows(v, r);
      }
    }
  }

  JacobiOutput out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = re[i * n + i];
  if (want_vectors) {
    out.vt = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
      out.vt(i / n, i % n) = Complex(v.re[i], real ? 0.0 : v.im[i]);
    }
  }
  return out;
}

std::vector<std::size_t> ascending_order(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return idx;
}

EigenSystem solve(const ComplexMatrix& m) {
  JacobiOutput raw = jacobi(m, true);
  const std::size_t n = m.rows();
  const auto order = ascending_order(raw.values);
  EigenSystem sys;
  sys.eigenvalues.resize(n);
  sys.vectors = ComplexMatrix(n, n);
  // Row i of vt is conj of eigenvector i (vt accumulates U* rows applied to I).
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    sys.eigenvalues[k] = raw.values[src];
    for (std::size_t r = 0; r < n; ++r) sys.vectors(r, k) = std::conj(raw.vt(src, r));
  }
  return sys;
}

double residual_of(const ComplexMatrix& m, const EigenSystem& sys) {
  const std::size_t n = m.rows();
  const double scale = std::max(m.norm_fro(), 1e-300);
  double worst = 0.0;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) v[r] = sys.vectors(r, k);
    const auto mv = m.apply(v);
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(mv[r] - sys.eigenvalues[k] * v[r]);
    worst = std::max(worst, std::sqrt(s) / scale);
  }
  return worst;
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
  check_hermitian(m, tol);
  EigenSystem sys = solve(m);
  const double res = residual_of(m, sys);
  if (res > tol) {
    throw DomainError("hermitian eigensolver: residual " + std::to_string(res) +
                      " exceeds tolerance " + std::to_string(tol));
  }
  return sys;
}

EigResult hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  check_hermitian(m, tol);
  EigenSystem sys = solve(m);
  EigResult out;
  out.residual = residual_of(m, sys);
  if (out.residual > tol) {
    throw DomainError("hermitian eigensolver: residual " + std::to_string(out.residual) +
                      " exceeds tolerance " + std::to_string(tol));
  }
  out.eigenvalues = std::move(sys.eigenvalues);
  return out;
}

std::vector<double> hermitian_eigenvalues_fast(const ComplexMatrix& m) {
  check_hermitian(m, conventions::kDefaultTol);
  if (m.rows() <= 8) {
    auto values = jacobi(m, false).values;
    std::sort(values.begin(), values.end());
    return values;
  }
  auto [diag, off] = householder_tridiagonalize(m);
  return tridiagonal_eigenvalues(std::move(diag), std::move(off));
}

}  // namespace perispec
