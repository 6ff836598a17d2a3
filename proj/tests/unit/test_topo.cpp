#include <random>

#include "doctest.h"
#include "perispec/error.hpp"
#include "perispec/topo/intersection_form.hpp"
#include "perispec/topo/invariants.hpp"
#include "perispec/topo/mod2_rational.hpp"

using namespace perispec;

namespace {

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

Mod2Rational m2(long p, long r = 1) { return Mod2Rational(q(p, r)); }

// Independent residue: shift by multiples of 2 until the value lies in [0, 2).
Rational residue_by_shifting(Rational v) {
  while (v < 0) v += 2;
  while (v >= 2) v -= 2;
  return v;
}

}  // namespace

TEST_CASE("Mod2Rational and rational text") {
  CHECK(m2(3).residue() == 1);
  CHECK(m2(-1).residue() == 1);
  CHECK(m2(-1, 2).residue() == q(3, 2));
  CHECK(m2(4).residue() == 0);
  CHECK(m2(5, 2).congruent(m2(1, 2)));
  CHECK_FALSE(m2(5, 2) == m2(1, 2));
  CHECK(to_string(q(-3, 6)) == "-1/2");
  CHECK(to_string(q(4)) == "4");
  CHECK(parse_rational("7/14") == q(1, 2));
  CHECK(parse_rational("-0.25") == q(-1, 4));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 40);
  for (int i = 0; i < 200; ++i) {
    const Rational v = q(num(rng), den(rng));
    CHECK(Mod2Rational(v).residue() == residue_by_shifting(v));
  }
}

TEST_CASE("builtin forms") {
  const auto h = builtin_form("H");
  CHECK(h.rank() == 2);
  CHECK(h.signature() == 0);
  CHECK(h.is_even());

  const auto e8 = builtin_form("E8");
  CHECK(e8.rank() == 8);
  CHECK(e8.signature() == 8);
  CHECK(e8.inertia().n_zero == 0);
  CHECK(e8.is_even());

  const auto k3 = builtin_form("K3");
  CHECK(k3.rank() == 22);
  CHECK(k3.signature() == -16);
  CHECK(k3.is_even());

  const auto d = builtin_form("Diag(1,-1,1)");
  CHECK(d.rank() == 3);
  CHECK(d.signature() == 1);
  CHECK_FALSE(d.is_even());

  CHECK_THROWS_AS(builtin_form("E7"), ContractViolation);
  CHECK_THROWS_AS(builtin_form("Diag()"), ContractViolation);
}

TEST_CASE("form sums and negation") {
  const auto e8 = builtin_form("E8");
  CHECK(direct_sum(e8, negate(e8)).signature() == 0);
  const auto eleven = parse_form_sum("-E8+E8+3H");
  CHECK(eleven.signature() == 0);
  CHECK(eleven.rank() == 22);
  CHECK(eleven.signature() == repeat(builtin_form("H"), 11).signature());
  CHECK(direct_sum(builtin_form("Diag(1)"), builtin_form("Diag(-1)")).signature() == 0);
  const auto k3 = parse_form_sum("-E8-E8+3H");
  CHECK(k3.signature() == builtin_form("K3").signature());
  CHECK(k3.entries() == builtin_form("K3").entries());
  CHECK_THROWS_AS(parse_form_sum("E8++H"), ContractViolation);
  CHECK_THROWS_AS(parse_form_sum("2X"), ContractViolation);
  CHECK_THROWS_AS(parse_form_sum(""), ContractViolation);
}

TEST_CASE("signature is additive and odd under negation over the corpus") {
  std::vector<IntersectionForm> corpus;
  for (const char* n : {"E8", "H", "K3", "Diag(1,1,-1)", "Diag(-1)"}) corpus.push_back(builtin_form(n));
  for (const auto& a : corpus) {
    CHECK(negate(a).signature() == -a.signature());
    for (const auto& b : corpus) CHECK(direct_sum(a, b).signature() == a.signature() + b.signature());
  }
}

TEST_CASE("rohlin") {
  CHECK(rohlin(8).residue() == 1);
  CHECK(rohlin(0).residue() == 0);
  CHECK(rohlin(32).residue() == 0);
  CHECK(rohlin(4).value() == q(1, 2));
  CHECK_THROWS_AS(rohlin(4, true), DomainError);
  CHECK(rohlin(-8, true).residue() == 1);
  for (long s = -40; s <= 40; ++s)
    for (long k = -3; k <= 3; ++k) CHECK(rohlin(s + 16 * k).congruent(rohlin(s)));
}

TEST_CASE("alpha_n and KO groups") {
  CHECK(ko_group(0) == KOGroup::Integers);
  CHECK(ko_group(12) == KOGroup::Integers);
  CHECK(ko_group(9) == KOGroup::Z2);
  CHECK(ko_group(2) == KOGroup::Z2);
  for (int n : {3, 5, 6, 7, 11}) CHECK(ko_group(n) == KOGroup::Trivial);
  CHECK(to_string(KOGroup::Z2) == "Z/2");

  auto a = alpha_n(4, SignatureData{-16});
  CHECK(a.group == KOGroup::Integers);
  CHECK(a.value == 1);
  a = alpha_n(3, std::monostate{});
  CHECK(a.group == KOGroup::Trivial);
  CHECK(a.value == 0);
  a = alpha_n(9, DimKer{3});
  CHECK(a.group == KOGroup::Z2);
  CHECK(a.value == 1);
  CHECK(alpha_n(10, DimKerPlus{4}).value == 0);
  CHECK(alpha_n(8, IndPlus{-3}).value == -3);
  CHECK(alpha_n(4, IndPlus{6}).value == 3);
  CHECK_THROWS_AS(alpha_n(4, IndPlus{3}), DomainError);
  CHECK_THROWS_AS(alpha_n(3, DimKer{1}), ContractViolation);
  CHECK_THROWS_AS(alpha_n(0, SignatureData{16}), ContractViolation);
  CHECK_THROWS_AS(alpha_n(1, IndPlus{1}), ContractViolation);
  for (long s = -64; s <= 64; ++s) {
    if (s % 16 == 0) CHECK(alpha_n(4, SignatureData{s}).value == -s / 16);
    else CHECK_THROWS_AS(alpha_n(4, SignatureData{s}), DomainError);
  }
}

TEST_CASE("alpha_s1") {
  auto x = alpha_s1(4, alpha_n(4, SignatureData{0}), alpha_n(3, std::monostate{}));
  CHECK(x.is_zero());
  x = alpha_s1(5, alpha_n(5, std::monostate{}), alpha_n(4, SignatureData{-32}));
  CHECK(x.top.value == 0);
  CHECK(x.fiber.value == 2);
  CHECK_FALSE(x.is_zero());
  CHECK_THROWS_AS(alpha_s1(5, alpha_n(5, std::monostate{}), alpha_n(3, std::monostate{})),
                  ContractViolation);
}

TEST_CASE("w invariant") {
  CHECK(w_invariant(0, 8) == 1);
  CHECK(w_invariant(2, 0) == 2);
  CHECK(Mod2Rational(w_invariant(2, 0)).residue() == 0);
  CHECK(w_invariant(-2, -16) == -4);
  CHECK(w_invariant(0, 4) == q(1, 2));
  CHECK(w_mod2_equals_rohlin(0, 8));
  CHECK(w_mod2_equals_rohlin(4, -8));
  CHECK_THROWS_AS(w_mod2_equals_rohlin(1, 8), DomainError);

  CHECK(w_welldefined_delta(8, 8) == 0);
  CHECK(w_welldefined_delta(8, 24) == -2);
  CHECK(w_welldefined_delta(0, -16) == 2);
  CHECK(w_invariant(5, 8) == w_invariant(5 + 2 * 0 - 2, 24));
  CHECK(novikov_glue_signature(8, 8) == 0);
  CHECK(novikov_glue_signature(8, 0) == -8);
  for (long a = -24; a <= 24; a += 8)
    for (long b = -24; b <= 24; b += 4) {
      CHECK(w_welldefined_delta(a, b) == -q(novikov_glue_signature(a, b), 8));
      // Shifting the index by the delta keeps w fixed.
      CHECK(w_invariant(0, a) == Rational(w_welldefined_delta(a, b)) + w_invariant(0, b));
    }
}

TEST_CASE("beta and w_cs") {
  CHECK(beta(m2(1), -16).residue() == 0);
  CHECK(beta(m2(0), 0).residue() == 0);
  CHECK(beta(m2(0), -16).residue() == 1);
  // Orientation of the lift does not matter mod 2.
  CHECK(beta(m2(1), 16).residue() == 0);
  CHECK(beta(m2(0), 16).residue() == 1);
  CHECK(beta(m2(0), 8).value() == q(-1, 2));
  CHECK_THROWS_AS(beta(m2(0), 8, true), DomainError);

  CHECK(beta_welldefined_check(m2(1), -16, 8));
  CHECK(beta_welldefined_check(m2(0), 0, -24));
  CHECK(beta_welldefined_check(m2(1, 2), 4, 16));

  CHECK(w_cs(0, 0, 0) == 0);
  CHECK(w_cs(0, 8, -16) == 2);
  CHECK(w_cs_matches_beta(0, 8, -16));
  CHECK(w_cs(-2, 0, -16) == -1);
  CHECK(Mod2Rational(w_cs(-2, 0, -16)).congruent(beta(m2(0), -16)));
}

TEST_CASE("identities over random inputs") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> big(-10000, 10000), den(1, 64);
  for (int i = 0; i < 300; ++i) {
    const Mod2Rational rho(q(big(rng), den(rng)));
    const long v = big(rng), w = big(rng);
    const auto lhs = beta(Mod2Rational(rho.value() + q(w, 8)), v + 2 * w);
    CHECK(lhs.congruent(beta(rho, v)));
    CHECK(beta_welldefined_check(rho, v, w));

    const long ind = 2 * (big(rng) / 2);
    CHECK(Mod2Rational(w_invariant(ind, w)).congruent(rohlin(w)));
    CHECK(w_mod2_equals_rohlin(ind, w));
    CHECK(Mod2Rational(w_cs(ind, w, v)).congruent(beta(rohlin(w), v)));
  }
}
