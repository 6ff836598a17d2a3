#include <algorithm>
#include <utility>

#include "perispec/error.hpp"
#include "perispec/linalg/rational.hpp"

namespace perispec {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw ContractViolation("RationalMatrix: initializer is not square");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::from_integers(std::size_t n, const std::vector<std::int64_t>& entries) {
  if (entries.size() != n * n) throw ContractViolation("RationalMatrix: entry count mismatch");
  RationalMatrix m(n);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = mpz_class(std::to_string(entries[k]));
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::congruent(const RationalMatrix& p) const {
  if (p.size() != n_) throw ContractViolation("congruent: size mismatch");
  RationalMatrix sp(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) sp(i, j) += (*this)(i, k) * p(k, j);
    }
  RationalMatrix out(n_);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(p(k, i)) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += p(k, i) * sp(k, j);
    }
  return out;
}

Inertia rational_ldl_inertia(const RationalMatrix& s) {
  if (!s.is_symmetric()) throw ContractViolation("rational_ldl_inertia: matrix is not symmetric");
  const std::size_t n = s.size();
  // Active index set; eliminated indices are removed from `live`.
  RationalMatrix a = s;
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  Inertia out;

  auto eliminate_one = [&](std::size_t p) {
    const Rational piv = a(p, p);
    (sgn(piv) > 0 ? out.n_plus : out.n_minus) += 1;
    std::erase(live, p);
    for (std::size_t i : live) {
      if (sgn(a(i, p)) == 0) continue;
      const Rational f = a(i, p) / piv;
      for (std::size_t j : live) a(i, j) -= f * a(p, j);
    }
  };

  auto eliminate_two = [&](std::size_t p, std::size_t q) {
    // Block E = [[a_pp, a_pq], [a_pq, a_qq]] with a_pp = a_qq = 0, det = −a_pq².
    out.n_plus += 1;
    out.n_minus += 1;
    std::erase(live, p);
    std::erase(live, q);
    const Rational b = a(p, q);
    // E⁻¹ = [[0, 1/b], [1/b, 0]]; Schur update a_ij −= [a_ip a_iq] E⁻¹ [a_pj a_qj]ᵀ.
    for (std::size_t i : live) {
      const Rational& aip = a(i, p);
      const Rational& aiq = a(i, q);
      if (sgn(aip) == 0 && sgn(aiq) == 0) continue;
      for (std::size_t j : live) a(i, j) -= (aip * a(q, j) + aiq * a(p, j)) / b;
    }
  };

  while (!live.empty()) {
    std::size_t best = live.front();
    for (std::size_t i : live)
      if (abs(a(i, i)) > abs(a(best, best))) best = i;
    if (sgn(a(best, best)) != 0) {
      eliminate_one(best);
      continue;
    }
    std::size_t bp = 0, bq = 0;
    Rational bmag = 0;
    for (std::size_t i : live)
      for (std::size_t j : live)
        if (i < j && abs(a(i, j)) > bmag) {
          bmag = abs(a(i, j));
          bp = i;
          bq = j;
        }
    if (sgn(bmag) == 0) {
      out.n_zero += live.size();
      break;
    }
    eliminate_two(bp, bq);
  }
  return out;
}

}  // namespace perispec
