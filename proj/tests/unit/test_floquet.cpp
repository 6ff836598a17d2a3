#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "perispec/discretize/circle_dirac.hpp"
#include "perispec/error.hpp"
#include "perispec/floquet/fredholm.hpp"
#include "perispec/linalg/eigen.hpp"
#include "perispec/linalg/svd.hpp"
#include "test_support.hpp"

using namespace perispec;
using namespace perispec::testing;

namespace {

constexpr double kPi = std::numbers::pi;

LaurentSymbol random_hermitian_symbol(std::size_t n, int d, std::mt19937_64& rng) {
  std::map<int, ComplexMatrix> c;
  c[0] = random_hermitian(n, rng);
  for (int j = 1; j <= d; ++j) {
    c[j] = random_matrix(n, n, rng);
    c[j] *= 0.5;
    c[-j] = c[j].adjoint();
  }
  return LaurentSymbol(n, c);
}

ComplexMatrix eval_reference(const LaurentSymbol& s, double theta) {
  ComplexMatrix m(s.block_size(), s.block_size());
  for (const auto& [j, a] : s.coefficients()) m += a * std::polar(1.0, j * theta);
  return m;
}

double sigma_min_reference(const LaurentSymbol& s, double theta) {
  return singular_reference(eval_reference(s, theta)).back();
}

// 4096-point grid with Eigen's SVD, then ternary search on the two cells
// around the best sample.
double circle_min_reference(const LaurentSymbol& s) {
  const int grid = 4096;
  const double h = 2 * kPi / grid;
  int best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double v = sigma_min_reference(s, k * h);
    if (v < best_v) best_v = v, best = k;
  }
  double lo = (best - 1) * h, hi = (best + 1) * h;
  for (int it = 0; it < 80; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (sigma_min_reference(s, m1) < sigma_min_reference(s, m2)) hi = m2;
    else lo = m1;
  }
  return std::min(best_v, sigma_min_reference(s, 0.5 * (lo + hi)));
}

}  // namespace

TEST_CASE("symbol_eval: closed cases") {
  const auto id = LaurentSymbol(2, {{0, ComplexMatrix::identity(2)}});
  CHECK(max_abs_diff(symbol_eval(id, Complex(0.3, -2.0)), ComplexMatrix::identity(2)) == 0.0);
  const auto z = LaurentSymbol::scalar({{1, 1.0}});
  CHECK(std::abs(symbol_eval(z, Complex(0, 1))(0, 0) - Complex(0, 1)) < 1e-15);
  CHECK_THROWS_AS(symbol_eval(z, 0.0), ContractViolation);
  const auto inv = LaurentSymbol::scalar({{-1, 1.0}, {0, -3.0}});
  CHECK(std::abs(symbol_eval(inv, 2.0)(0, 0) - (-2.5)) < 1e-15);
}

TEST_CASE("symbol_eval: Hermitian on the circle for Hermitian-symmetric symbols") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_hermitian_symbol(3, 2, rng);
    CHECK(s.hermitian_symmetric());
    for (double theta : {0.0, 0.7, 2.9, 5.1}) {
      const auto m = symbol_eval(s, std::polar(1.0, theta));
      CHECK(max_abs_diff(m, m.adjoint()) < 1e-13);
      CHECK(max_abs_diff(m, eval_reference(s, theta)) < 1e-12);
    }
  }
  const auto z = LaurentSymbol::scalar({{1, 1.0}});
  CHECK_FALSE(z.hermitian_symmetric());
}

TEST_CASE("min_singular_on_circle: scalar examples") {
  const auto zm2 = LaurentSymbol::scalar({{0, -2.0}, {1, 1.0}});
  auto m = min_singular_on_circle(zm2);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(m.z - Complex(1.0)) < 1e-4);

  const auto zm1 = LaurentSymbol::scalar({{0, -1.0}, {1, 1.0}});
  m = min_singular_on_circle(zm1);
  CHECK(m.value < 1e-7);
  CHECK(std::abs(m.z - Complex(1.0)) < 1e-6);
}

TEST_CASE("min_singular_on_circle: dense-grid oracle on Hermitian 3-band symbols") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    const auto s = random_hermitian_symbol(3, 3, rng);
    const double ours = min_singular_on_circle(s, 512).value;
    CHECK(std::abs(ours - circle_min_reference(s)) < 1e-6);
  }
}

TEST_CASE("min_singular_on_circle: rotation z -> e^{i phi} z leaves the minimum fixed") {
  std::mt19937_64 rng(5);
  const auto s = random_hermitian_symbol(2, 2, rng);
  const double phi = 1.234;
  std::map<int, ComplexMatrix> rot;
  for (const auto& [j, a] : s.coefficients()) rot[j] = a * std::polar(1.0, j * phi);
  const double a = min_singular_on_circle(s).value;
  const double b = min_singular_on_circle(LaurentSymbol(2, rot)).value;
  CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("is_fredholm: examples") {
  auto r = is_fredholm(LaurentSymbol::scalar({{0, -2.0}, {1, 1.0}}));
  CHECK(r.is_fredholm);
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 0);
  CHECK(r.witness.has_value());

  r = is_fredholm(LaurentSymbol::scalar({{1, 1.0}}));
  CHECK(r.is_fredholm);
  REQUIRE(r.index.has_value());
  CHECK(*r.index == -1);

  r = is_fredholm(LaurentSymbol::scalar({{0, -1.0}, {1, 1.0}}));
  CHECK_FALSE(r.is_fredholm);
  CHECK_FALSE(r.index.has_value());
  REQUIRE(r.witness.has_value());
  CHECK(std::abs(r.witness->z - Complex(1.0)) < 1e-6);
  CHECK(r.is_fredholm == (r.min_singular > r.tol));
}

TEST_CASE("is_fredholm: the bounding circle period symbol has a circle zero") {
  for (auto scheme : {Scheme::CentralDifference}) {
    const auto d0 = build_circle_dirac(16, scheme, SpinStructure::Bounding, TwistParameter(0.0));
    const auto s = fourier_laplace_symbol(d0);
    const auto r = is_fredholm(s);
    CHECK_FALSE(r.is_fredholm);
    // The kernel sits at c = 1/2, i.e. z = −1.
    REQUIRE(r.witness.has_value());
    CHECK(std::abs(r.witness->z - Complex(-1.0)) < 1e-5);

    const auto massive = is_fredholm(with_mass(s, 1.0));
    CHECK(massive.is_fredholm);
    CHECK(massive.min_singular >= 1.0 - 1e-9);
  }
}

TEST_CASE("toeplitz_index: examples against the half-line section oracle") {
  const std::vector<std::map<int, Complex>> cases = {
      {{1, 1.0}},                // z
      {{-1, 1.0}, {0, -3.0}},    // z⁻¹ − 3
      {{0, -0.25}, {2, 1.0}},    // z² − 1/4
  };
  const std::vector<long> expected = {-1, 0, -2};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto s = LaurentSymbol::scalar(cases[k]);
    CHECK(toeplitz_index(s) == expected[k]);
    CHECK(toeplitz_index(s) == half_line_index_reference(cases[k], 128, 1e-6));
    CHECK(toeplitz_index(s) == conventions::kIndexSign * winding_number(s));
  }
  CHECK_THROWS_AS(toeplitz_index(LaurentSymbol::scalar({{0, -1.0}, {1, 1.0}})), DomainError);
}

TEST_CASE("toeplitz_index: additive under direct sums and products of roots") {
  const auto a = LaurentSymbol::scalar({{1, 1.0}});
  const auto b = LaurentSymbol::scalar({{0, -0.25}, {2, 1.0}});
  const auto c = LaurentSymbol::scalar({{-1, 1.0}, {0, 0.1}});
  CHECK(toeplitz_index(direct_sum(a, b)) == toeplitz_index(a) + toeplitz_index(b));
  CHECK(toeplitz_index(direct_sum(b, c)) == toeplitz_index(b) + toeplitz_index(c));

  const std::vector<Complex> roots = {Complex(0.3, 0.1), Complex(-2.0, 0.5), Complex(0.0, 1.6)};
  const auto p = LaurentSymbol::from_roots(roots, 1);
  // One root inside, shift z^{-1}: winding 1 − 1 = 0.
  CHECK(winding_number(p) == 0);
  CHECK(toeplitz_index(p) == 0);
}

TEST_CASE("finite_section: structure") {
  const auto id = LaurentSymbol(3, {{0, ComplexMatrix::identity(3)}});
  CHECK(max_abs_diff(finite_section(id, 4), ComplexMatrix::identity(12)) == 0.0);

  const auto z = LaurentSymbol::scalar({{1, 1.0}});
  const auto sh = finite_section(z, 5);
  CHECK(sh.rows() == 5);
  CHECK(numeric_kernel_dim(sh, 1e-9) == 1);
  for (std::size_t i = 0; i + 1 < 5; ++i) CHECK(sh(i, i + 1) == Complex(1.0));

  std::mt19937_64 rng(8);
  const auto h = random_hermitian_symbol(2, 2, rng);
  const auto hs = finite_section(h, 6);
  CHECK(max_abs_diff(hs, hs.adjoint()) < 1e-15);
  CHECK_THROWS_AS(finite_section(h, 4), ContractViolation);
}

TEST_CASE("fredholm_via_sections: examples") {
  const std::vector<std::size_t> sizes = {16, 32, 64};
  auto r = fredholm_via_sections(LaurentSymbol::scalar({{0, -2.0}, {1, 1.0}}), sizes);
  CHECK(r.verdict == SectionVerdict::Stable);
  CHECK(r.sigma_min.back() >= 0.5);

  r = fredholm_via_sections(LaurentSymbol::scalar({{0, -1.0}, {1, 1.0}}), sizes);
  CHECK(r.verdict == SectionVerdict::Decaying);

  const auto d0 = build_circle_dirac(8, Scheme::CentralDifference, SpinStructure::Bounding,
                                     TwistParameter(0.0));
  r = fredholm_via_sections(with_mass(fourier_laplace_symbol(d0), 1.0), {8, 16, 32});
  CHECK(r.verdict == SectionVerdict::Stable);
  CHECK(to_string(SectionVerdict::Decaying) == "decaying");
}

TEST_CASE("winding_number: roots inside minus poles") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> roots;
    long inside = 0;
    for (int k = 0; k < 4; ++k) {
      const double r = (rng() % 2) ? 0.5 : 1.7;
      inside += r < 1;
      roots.push_back(std::polar(r, ang(rng)));
    }
    const int shift = static_cast<int>(rng() % 3);
    CHECK(winding_number(LaurentSymbol::from_roots(roots, shift)) == inside - shift);
  }
}
