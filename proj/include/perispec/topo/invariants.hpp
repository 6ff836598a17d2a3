#pragma once

#include <string>
#include <variant>

#include "perispec/linalg/rational.hpp"
#include "perispec/topo/mod2_rational.hpp"

namespace perispec {

// ---- α-invariant ---------------------------------------------------------

/// KO_k: ℤ for k ≡ 0, 4; ℤ/2 for k ≡ 1, 2; 0 otherwise (mod 8).
enum class KOGroup { Integers, Z2, Trivial };
KOGroup ko_group(int dimension);
std::string to_string(KOGroup g);

struct KOElement {
  int dimension = 0;
  KOGroup group = KOGroup::Trivial;
  long value = 0;  // integer for ℤ, 0/1 for ℤ/2, 0 for the trivial group

  bool is_zero() const noexcept { return value == 0; }
  friend bool operator==(const KOElement&, const KOElement&) = default;
};

struct IndPlus { long value; };          // ind D⁺(X, g)
struct DimKer { unsigned long value; };  // dim ker D(X, g)
struct DimKerPlus { unsigned long value; };
struct SignatureData { long value; };    // sign(X), dimension ≡ 4 only
using AlphaData = std::variant<std::monostate, IndPlus, DimKer, DimKerPlus, SignatureData>;

/// α_n(X) ∈ KO_n from the index datum matching n mod 8:
/// n ≡ 0: ind D⁺;  n ≡ 4: ½ ind D⁺ or −sign/16;  n ≡ 1: dim ker D mod 2;
/// n ≡ 2: dim ker D⁺ mod 2;  other n: the trivial group (no datum).
/// Mismatched data is a ContractViolation; failed divisibility a DomainError.
KOElement alpha_n(int n, const AlphaData& data);

/// α(X) = α_n(X) + α_{n−1}(Y) ∈ KO_n ⊕ KO_{n−1}.
struct AlphaS1 {
  KOElement top;
  KOElement fiber;
  bool is_zero() const noexcept { return top.is_zero() && fiber.is_zero(); }
};
AlphaS1 alpha_s1(int n, const KOElement& top, const KOElement& fiber);

// ---- Rohlin, w, β --------------------------------------------------------

/// ρ = sign(W)/8 mod 2. With `strict`, 8 ∤ sign(W) is a DomainError.
Mod2Rational rohlin(long sig_w, bool strict = false);

/// w = ind_ℂ D⁺(W_U) + sign(W)/8.
Rational w_invariant(long ind_plus, long sig_w);

/// w ≡ ρ (mod 2). DomainError when ind_plus is odd.
bool w_mod2_equals_rohlin(long ind_plus, long sig_w);

/// Index jump between two fillings W, W′: (sign W − sign W′)/8.
Rational w_welldefined_delta(long sig_w, long sig_w_prime);

/// β = ρ − sign(V)/16 mod 2. With `strict`, 16 ∤ sign(V) is a DomainError.
Mod2Rational beta(const Mod2Rational& rho_y, long sig_v, bool strict = false);

/// Recomputes β after moving the cut across a cobordism of signature sig_w
/// (ρ₁ = ρ₀ + sig_w/8, sign V₁ = sign V₀ + 2·sig_w) and compares exactly.
bool beta_welldefined_check(const Mod2Rational& rho0, long sig_v0, long sig_w_cobordism);

/// w_cs = ind_ℂ D⁺ + sign(W)/8 − sign(V)/16.
Rational w_cs(long ind_plus, long sig_w, long sig_v);
/// w_cs mod 2 agrees with β(ρ(W), V) (requires even ind_plus).
bool w_cs_matches_beta(long ind_plus, long sig_w, long sig_v);

/// sign(−W ∪ W′) = sign W′ − sign W.
long novikov_glue_signature(long sig_w, long sig_w_prime);

}  // namespace perispec
