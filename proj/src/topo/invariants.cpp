#include "perispec/topo/invariants.hpp"

#include <string>

#include "perispec/error.hpp"

namespace perispec {

namespace {

int mod8(int n) { return ((n % 8) + 8) % 8; }

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string variant_name(const AlphaData& d) {
  switch (d.index()) {
    case 0:
      return "none";
    case 1:
      return "ind_plus";
    case 2:
      return "dim_ker";
    case 3:
      return "dim_ker_plus";
    default:
      return "sign";
  }
}

[[noreturn]] void mismatch(int n, const AlphaData& d, const char* expected) {
  throw ContractViolation("alpha_n: dimension " + std::to_string(n) + " expects " + expected +
                          ", got " + variant_name(d));
}

}  // namespace

KOGroup ko_group(int dimension) {
  switch (mod8(dimension)) {
    case 0:
    case 4:
      return KOGroup::Integers;
    case 1:
    case 2:
      return KOGroup::Z2;
    default:
      return KOGroup::Trivial;
  }
}

std::string to_string(KOGroup g) {
  switch (g) {
    case KOGroup::Integers:
      return "Z";
    case KOGroup::Z2:
      return "Z/2";
    case KOGroup::Trivial:
      break;
  }
  return "0";
}

KOElement alpha_n(int n, const AlphaData& data) {
  if (n < 0) throw ContractViolation("alpha_n: dimension must be non-negative");
  KOElement e{n, ko_group(n), 0};
  switch (mod8(n)) {
    case 0:
      if (const auto* d = std::get_if<IndPlus>(&data)) {
        e.value = d->value;
        return e;
      }
      mismatch(n, data, "ind_plus");
    case 4:
      if (const auto* d = std::get_if<IndPlus>(&data)) {
        if (d->value % 2 != 0) {
          throw DomainError("alpha_n: ind D+ = " + std::to_string(d->value) +
                            " is odd in dimension 4 mod 8");
        }
        e.value = d->value / 2;
        return e;
      }
      if (const auto* d = std::get_if<SignatureData>(&data)) {
        if (d->value % 16 != 0) {
          throw DomainError("alpha_n: signature " + std::to_string(d->value) +
                            " is not divisible by 16");
        }
        e.value = -d->value / 16;
        return e;
      }
      mismatch(n, data, "ind_plus or sign");
    case 1:
      if (const auto* d = std::get_if<DimKer>(&data)) {
        e.value = static_cast<long>(d->value % 2);
        return e;
      }
      mismatch(n, data, "dim_ker");
    case 2:
      if (const auto* d = std::get_if<DimKerPlus>(&data)) {
        e.value = static_cast<long>(d->value % 2);
        return e;
      }
      mismatch(n, data, "dim_ker_plus");
    default:
      if (!std::holds_alternative<std::monostate>(data)) mismatch(n, data, "no datum (trivial group)");
      return e;
  }
}

AlphaS1 alpha_s1(int n, const KOElement& top, const KOElement& fiber) {
  if (n < 1) throw ContractViolation("alpha_s1: dimension must be at least 1");
  if (mod8(top.dimension) != mod8(n) || mod8(fiber.dimension) != mod8(n - 1)) {
    throw ContractViolation("alpha_s1: components live in KO_" + std::to_string(top.dimension) +
                            " and KO_" + std::to_string(fiber.dimension) + ", expected KO_" +
                            std::to_string(n) + " and KO_" + std::to_string(n - 1));
  }
  if (top.group != ko_group(n) || fiber.group != ko_group(n - 1)) {
    throw ContractViolation("alpha_s1: component group does not match its dimension");
  }
  return {top, fiber};
}

Mod2Rational rohlin(long sig_w, bool strict) {
  if (strict && sig_w % 8 != 0) {
    throw DomainError("rohlin: signature " + std::to_string(sig_w) +
                      " is not divisible by 8 (not a spin filling?)");
  }
  return Mod2Rational(frac(sig_w, 8));
}

Rational w_invariant(long ind_plus, long sig_w) {
  Rational w = Rational(ind_plus) + frac(sig_w, 8);
  w.canonicalize();
  return w;
}

bool w_mod2_equals_rohlin(long ind_plus, long sig_w) {
  if (ind_plus % 2 != 0) {
    throw DomainError("w_mod2_equals_rohlin: ind D+ = " + std::to_string(ind_plus) +
                      " is odd; a quaternionic-linear operator has even complex index");
  }
  return Mod2Rational(w_invariant(ind_plus, sig_w)).congruent(rohlin(sig_w));
}

Rational w_welldefined_delta(long sig_w, long sig_w_prime) {
  return frac(sig_w - sig_w_prime, 8);
}

Mod2Rational beta(const Mod2Rational& rho_y, long sig_v, bool strict) {
  if (strict && sig_v % 16 != 0) {
    throw DomainError("beta: sign(V) = " + std::to_string(sig_v) + " is not divisible by 16");
  }
  Rational b = rho_y.value() - frac(sig_v, 16);
  return Mod2Rational(b);
}

bool beta_welldefined_check(const Mod2Rational& rho0, long sig_v0, long sig_w_cobordism) {
  const Mod2Rational rho1(rho0.value() + frac(sig_w_cobordism, 8));
  const long sig_v1 = sig_v0 + 2 * sig_w_cobordism;
  return beta(rho1, sig_v1) == beta(rho0, sig_v0);
}

Rational w_cs(long ind_plus, long sig_w, long sig_v) {
  Rational w = Rational(ind_plus) + frac(sig_w, 8) - frac(sig_v, 16);
  w.canonicalize();
  return w;
}

bool w_cs_matches_beta(long ind_plus, long sig_w, long sig_v) {
  if (ind_plus % 2 != 0) {
    throw DomainError("w_cs_matches_beta: ind D+ = " + std::to_string(ind_plus) + " is odd");
  }
  return Mod2Rational(w_cs(ind_plus, sig_w, sig_v)).congruent(beta(rohlin(sig_w), sig_v));
}

long novikov_glue_signature(long sig_w, long sig_w_prime) { return sig_w_prime - sig_w; }

}  // namespace perispec
