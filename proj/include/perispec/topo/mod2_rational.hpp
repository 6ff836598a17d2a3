#pragma once

#include <string>

#include "perispec/linalg/rational.hpp"

namespace perispec {

/// Canonical GMP text form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Parses "p", "p/q" or a terminating decimal such as "-0.25". Throws ParseError.
Rational parse_rational(const std::string& text);

/// Exact rational together with its class in ℚ/2ℤ, residue in [0, 2).
class Mod2Rational {
 public:
  Mod2Rational() : Mod2Rational(Rational(0)) {}
  explicit Mod2Rational(Rational value);

  const Rational& value() const noexcept { return value_; }
  const Rational& residue() const noexcept { return residue_; }
  /// Same class mod 2ℤ.
  bool congruent(const Mod2Rational& other) const { return residue_ == other.residue_; }

  friend bool operator==(const Mod2Rational& a, const Mod2Rational& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
  Rational residue_;
};

}  // namespace perispec
