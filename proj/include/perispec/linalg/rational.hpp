#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace perispec {

using Rational = mpq_class;

/// Exact square matrix over ℚ, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix from_integers(std::size_t n, const std::vector<std::int64_t>& entries);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  /// Pᵀ S P.
  RationalMatrix congruent(const RationalMatrix& p) const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by symmetric pivoted LDLᵀ over exact rationals.
/// Pivot: largest-magnitude diagonal entry; when every remaining diagonal
/// entry vanishes, a 2×2 block on the largest off-diagonal entry (which has
/// negative determinant and contributes one + and one −).
Inertia rational_ldl_inertia(const RationalMatrix& s);

}  // namespace perispec
