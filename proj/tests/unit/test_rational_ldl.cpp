#include <random>

#include "doctest.h"
#include "perispec/error.hpp"
#include "perispec/linalg/rational.hpp"
#include "test_support.hpp"

using namespace perispec;

namespace {

RationalMatrix e8() {
  // Cartan matrix, Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
  RationalMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  for (auto [a, b] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}) {
    m(a - 1, b - 1) = -1;
    m(b - 1, a - 1) = -1;
  }
  return m;
}

// Random unimodular integer matrix: product of elementary row operations.
RationalMatrix unimodular(std::size_t n, std::mt19937_64& rng) {
  RationalMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) p(i, i) = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int f = k(rng);
    for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
  }
  return p;
}

}  // namespace

TEST_CASE("inertia of small forms") {
  CHECK(rational_ldl_inertia(RationalMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(rational_ldl_inertia(RationalMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
  CHECK(rational_ldl_inertia(RationalMatrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
  // All-zero diagonal with a zero row mixed in.
  CHECK(rational_ldl_inertia(RationalMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}) == Inertia{1, 1, 1});
}

TEST_CASE("E8 is positive definite") {
  const auto in = rational_ldl_inertia(e8());
  CHECK(in == Inertia{8, 0, 0});
  CHECK(in.signature() == 8);
}

TEST_CASE("non-symmetric input is rejected") {
  CHECK_THROWS_AS(rational_ldl_inertia(RationalMatrix{{1, 2}, {3, 4}}), ContractViolation);
}

TEST_CASE("inertia is invariant under unimodular congruence") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    RationalMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = entry(rng);
    const auto p = unimodular(n, rng);
    const auto t = s.congruent(p);
    CHECK(t.is_symmetric());
    CHECK(rational_ldl_inertia(t) == rational_ldl_inertia(s));
  }
  const auto p = unimodular(8, rng);
  CHECK(rational_ldl_inertia(e8().congruent(p)) == Inertia{8, 0, 0});
}

TEST_CASE("inertia agrees with floating-point eigenvalue signs on well-separated forms") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 6;
    RationalMatrix s(n);
    Eigen::MatrixXd d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const int v = entry(rng);
        s(i, j) = s(j, i) = v;
        d(i, j) = d(j, i) = v;
      }
    }
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues();
    if ((ev.array().abs() < 1e-8).any()) continue;
    Inertia expect;
    for (double x : ev) (x > 0 ? expect.n_plus : expect.n_minus)++;
    CHECK(rational_ldl_inertia(s) == expect);
  }
}
