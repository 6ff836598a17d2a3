#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perispec/linalg/rational.hpp"

namespace perispec {

/// Symmetric integer bilinear form with its exact inertia.
class IntersectionForm {
 public:
  IntersectionForm(std::string name, std::size_t rank, std::vector<std::int64_t> entries);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return rank_; }
  long signature() const noexcept { return inertia_.signature(); }
  const Inertia& inertia() const noexcept { return inertia_; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  /// Even forms have only even diagonal entries.
  bool is_even() const;

 private:
  std::string name_;
  std::size_t rank_;
  std::vector<std::int64_t> entries_;
  Inertia inertia_;
};

/// E8 (positive definite, signature +8), H (hyperbolic plane), K3
/// (2·(−E8) ⊕ 3·H, signature −16), or Diag(a,b,...).
IntersectionForm builtin_form(std::string_view name);
std::vector<std::string> builtin_form_names();

IntersectionForm direct_sum(const IntersectionForm& a, const IntersectionForm& b);
IntersectionForm negate(const IntersectionForm& a);
/// k-fold direct sum, k ≥ 1.
IntersectionForm repeat(const IntersectionForm& a, std::size_t k);

/// Sum expression: terms joined by '+' or '-', each with an optional sign (orientation
/// reversal), an optional multiplicity and a builtin name: "-E8+E8+3H".
IntersectionForm parse_form_sum(std::string_view spec);

}  // namespace perispec
