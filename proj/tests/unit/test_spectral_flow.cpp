#include <cmath>
#include <random>

#include "doctest.h"
#include "perispec/discretize/circle_dirac.hpp"
#include "perispec/error.hpp"
#include "perispec/floquet/spectral_flow.hpp"
#include "test_support.hpp"

using namespace perispec;
using namespace perispec::testing;

namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
  ComplexMatrix m(v.size(), v.size());
  std::size_t i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

HermitianFamily circle_family(SpinStructure spin, double c0) {
  return [=](double t) {
    return build_circle_dirac(16, Scheme::Spectral, spin, TwistParameter(c0 + t)).matrix;
  };
}

}  // namespace

TEST_CASE("spectral_flow: circle twist family over one period") {
  auto r = spectral_flow(circle_family(SpinStructure::Bounding, 0.0));
  CHECK(std::abs(r.flow) == 1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(std::abs(r.crossings[0].parameter - 0.5) < 1e-6);
  // D^c = D − c: eigenvalues fall as c grows.
  CHECK(r.crossings[0].direction == -1);
  CHECK(r.endpoints_isospectral);

  r = spectral_flow(circle_family(SpinStructure::NonBounding, 0.0));
  CHECK(std::abs(r.flow) == 1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0].parameter < 1e-6);

  r = spectral_flow(circle_family(SpinStructure::NonBounding, -0.5));
  CHECK(r.flow == -1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(std::abs(r.crossings[0].parameter - 0.5) < 1e-6);
}

TEST_CASE("spectral_flow: diagonal families") {
  auto r = spectral_flow([](double) { return diag({1.0, -2.0}); });
  CHECK(r.flow == 0);
  CHECK(r.crossings.empty());
  CHECK(r.endpoints_isospectral);

  r = spectral_flow([](double c) { return diag({c - 0.5, c + 2.0}); });
  CHECK(r.flow == 1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0].direction == 1);
  CHECK(std::abs(r.crossings[0].parameter - 0.5) < 1e-9);
  CHECK_FALSE(r.endpoints_isospectral);

  // Two eigenvalues crossing in opposite directions cancel.
  r = spectral_flow([](double c) { return diag({c - 0.3, 0.7 - c}); });
  CHECK(r.flow == 0);
  CHECK(r.crossings.size() == 2);
}

TEST_CASE("spectral_flow: flow equals the sum of crossing directions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h0 = random_hermitian(6, rng);
    const auto h1 = random_hermitian(6, rng);
    const auto r = spectral_flow([&](double t) {
      ComplexMatrix m = h0;
      m *= 1.0 - t;
      return m + h1 * Complex(t);
    });
    long sum = 0;
    for (const auto& x : r.crossings) sum += x.direction;
    CHECK(sum == r.flow);
    // Net flow = change in the negative count between the endpoints.
    auto negatives = [](const ComplexMatrix& m) {
      long k = 0;
      for (double v : eigen_reference(m)) k += v < 0;
      return k;
    };
    CHECK(r.flow == negatives(h0) - negatives(h1));
  }
}

TEST_CASE("spectral_flow: shifted Hermitian matrix crosses once per eigenvalue in range") {
  std::mt19937_64 rng(32);
  const auto h = random_hermitian(8, rng);
  const double shift = 1.5;
  const auto r = spectral_flow([&](double t) { return h + ComplexMatrix::identity(8) * Complex(shift * t); });
  long expected = 0;
  for (double v : eigen_reference(h)) expected += (v < 0 && v > -shift);
  CHECK(r.flow == expected);
  for (const auto& x : r.crossings) CHECK(x.direction == 1);
}

TEST_CASE("spectral_flow: errors") {
  CHECK_THROWS_AS(spectral_flow([](double c) { return diag({0.0, c + 1.0}); }), DomainError);
  SpectralFlowOptions o;
  o.steps = 1;
  CHECK_THROWS_AS(spectral_flow([](double) { return diag({1.0}); }, o), ContractViolation);
}
