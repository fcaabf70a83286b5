#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "catneg/error.hpp"
#include "catneg/states.hpp"
#include "test_support.hpp"

using namespace catneg;
using namespace catneg::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// phi^N by repeated kron; independent of the Hamming-weight construction.
ComplexVector kron_power(const std::array<double, 2>& phi, int n) {
  ComplexMatrix v = ComplexMatrix::Ones(1, 1);
  ComplexMatrix single(2, 1);
  single << phi[0], phi[1];
  for (int i = 0; i < n; ++i) v = kron(v, single);
  return v;
}

ComplexVector normalized(const ComplexVector& v) { return v / v.norm(); }

// Amplitudes after exchanging qubits i and j.
ComplexVector swap_qubits(const ComplexVector& v, int i, int j, int n) {
  return qubit_swap(i, j, n) * v;
}

}  // namespace

TEST_CASE("single-qubit states") {
  const auto plus = single_qubit_state(kPi / 4, Sign::plus);
  CHECK(plus[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(plus[1] == doctest::Approx(1 / std::sqrt(2.0)));
  const auto zero = single_qubit_state(0.0, Sign::minus);
  CHECK(zero[0] == 1.0);
  CHECK(zero[1] == 0.0);
  const auto third = single_qubit_state(kPi / 3, Sign::minus);
  CHECK(third[0] == doctest::Approx(0.5));
  CHECK(third[1] == doctest::Approx(-0.8660254037844386));
  for (double th : {0.0, 0.3, 1.2, kPi / 2}) {
    const auto s = single_qubit_state(th, Sign::plus);
    CHECK(s[0] * s[0] + s[1] * s[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("cat state at theta0 = 0 collapses to |00>") {
  const StateVector v = cat_state({2, 0.0});
  ComplexVector expected = ComplexVector::Zero(4);
  expected(0) = 1.0;
  CHECK((v.amplitudes - expected).norm() < 1e-15);
}

TEST_CASE("cat state at theta0 = pi/4 is a Bell state") {
  // |++> + |--> = (|00> + |11>) up to normalization; cross terms cancel.
  const StateVector v = cat_state({2, kPi / 4});
  ComplexVector expected = ComplexVector::Zero(4);
  expected(0) = expected(3) = 1 / std::sqrt(2.0);
  CHECK((v.amplitudes - expected).norm() < 1e-15);
}

TEST_CASE("cat state normalization for N = 10, theta0 = pi/3") {
  const StateVector v = cat_state({10, kPi / 3});
  const double norm = std::sqrt(2.0 * (1.0 + std::pow(std::cos(2 * kPi / 3), 10)));
  CHECK(v.amplitudes(0).real() == doctest::Approx(2 * std::pow(std::cos(kPi / 3), 10) / norm).epsilon(1e-13));
  CHECK(v.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("standard variant matches the kron construction") {
  for (int n : {2, 3, 5, 7}) {
    for (double th : {0.1, 0.7, kPi / 3, 1.5}) {
      const ComplexVector oracle = normalized(kron_power(single_qubit_state(th, Sign::plus), n) +
                                              kron_power(single_qubit_state(th, Sign::minus), n));
      CHECK((cat_state({n, th}).amplitudes - oracle).norm() < 1e-13);
    }
  }
}

TEST_CASE("variants match their kron constructions") {
  const int n = 5;
  const double th = 0.4;
  const ComplexVector zero = kron_power({1.0, 0.0}, n);
  const ComplexVector one = kron_power({0.0, 1.0}, n);
  CHECK((cat_state({n, th, 0.0, CatVariant::z_basis_ghz}).amplitudes - normalized(zero + one)).norm() < 1e-14);
  const ComplexVector tilted = kron_power(single_qubit_state(th, Sign::plus), n);
  CHECK((cat_state({n, th, 0.0, CatVariant::zero_and_tilted}).amplitudes - normalized(zero + tilted)).norm() < 1e-14);
}

TEST_CASE("cat states are unit norm and permutation symmetric") {
  Rng rng(29);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2 - 1e-3);
  for (auto variant : {CatVariant::standard, CatVariant::z_basis_ghz, CatVariant::zero_and_tilted}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + trial % 5;
      const double th = angle(rng);
      const StateVector v = cat_state({n, th, 0.0, variant});
      CHECK(std::abs(v.amplitudes.squaredNorm() - 1.0) < 1e-12);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int i = pick(rng);
      const int j = pick(rng);
      CHECK((swap_qubits(v.amplitudes, i, j, n) - v.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("Gaussian states are permutation symmetric too") {
  const StateVector v = cat_state({6, 0.3, 0.05}, QuadratureSpec{});
  CHECK((swap_qubits(v.amplitudes, 0, 4, 6) - v.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(v.amplitudes.squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("Gaussian width 1e-4 reproduces the delta state") {
  for (int n : {2, 5, 10}) {
    for (double th : {0.1, kPi / 3}) {
      const StateVector delta = cat_state({n, th});
      const StateVector narrow = cat_state({n, th, 1e-4}, QuadratureSpec{});
      CHECK((delta.amplitudes - narrow.amplitudes).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("quadrature converges when the node count is doubled") {
  for (double s : {0.01, 0.05, 0.1}) {
    for (double th : {0.05, 0.5, kPi / 2 - 0.05}) {
      const StateVector a = cat_state({6, th, s}, QuadratureSpec{61, 6.0});
      const StateVector b = cat_state({6, th, s}, QuadratureSpec{121, 6.0});
      CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("x-basis and z-basis GHZ states are related by Hadamards") {
  const int n = 4;
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  ComplexMatrix hn = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) hn = kron(hn, h);
  const ComplexVector rotated = hn * cat_state({n, kPi / 4}).amplitudes;
  const ComplexVector ghz = cat_state({n, kPi / 4, 0.0, CatVariant::z_basis_ghz}).amplitudes;
  CHECK((rotated - ghz).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Gauss-Legendre rules") {
  for (int nodes : {1, 3, 7, 61}) {
    const QuadratureRule r = gauss_legendre(nodes);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::is_sorted(r.nodes.begin(), r.nodes.end()));
    // Exact for polynomial degree 2n-1.
    for (int deg = 0; deg <= 2 * nodes - 1; deg += 2) {
      double integral = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) integral += r.weights[i] * std::pow(r.nodes[i], deg);
      CHECK(integral == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
    }
  }
  // Gaussian moment: int exp(-x^2/2) over [-6, 6] ~ sqrt(2 pi).
  const QuadratureRule r = gauss_legendre(61);
  double g = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const double x = 6.0 * r.nodes[i];
    g += 6.0 * r.weights[i] * std::exp(-x * x / 2);
  }
  CHECK(g == doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-8));
}

TEST_CASE("density matrices of pure states") {
  SUBCASE("|0> gives diag(1, 0)") {
    StateVector v{1, ComplexVector::Zero(2)};
    v.amplitudes(0) = 1.0;
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(max_abs_diff(density_from_state(v), expected) == 0.0);
  }
  SUBCASE("Bell projector has 1/2 in its corners") {
    const ComplexMatrix rho = density_from_state(cat_state({2, 0.0, 0.0, CatVariant::z_basis_ghz}));
    CHECK(rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho(0, 3).real() == doctest::Approx(0.5));
    CHECK(rho(3, 0).real() == doctest::Approx(0.5));
    CHECK(rho(3, 3).real() == doctest::Approx(0.5));
  }
  SUBCASE("trace one and rank one") {
    for (double th : {0.2, 0.9, 1.3}) {
      const ComplexMatrix rho = density_from_state(cat_state({5, th, 0.02}, QuadratureSpec{}));
      CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
      const auto ev = hermitian_eigenvalues(rho).eigenvalues;
      CHECK(ev.back() == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-10);
    }
  }
}

TEST_CASE("invalid cat state specs") {
  CHECK_THROWS_AS(cat_state({1, 0.3}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, -0.1}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, kPi / 2 + 1e-9}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, 0.3, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({15, 0.3}), CapacityError);
  CHECK_NOTHROW(cat_state({3, 0.3}, std::nullopt, 3));
  CHECK_THROWS_AS(cat_state({4, 0.3}, std::nullopt, 3), CapacityError);
  CHECK_THROWS_AS(cat_state({4, 0.3, 0.05}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, 0.3, 0.05, CatVariant::z_basis_ghz}, QuadratureSpec{}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, 0.3, 0.05}, QuadratureSpec{60, 6.0}), InvalidArgument);
  CHECK_THROWS_AS(cat_state({4, 0.3, 0.05}, QuadratureSpec{61, 0.0}), InvalidArgument);
  // phi1 = |1>, phi2 = -|1>: the branches cancel for odd N.
  CHECK_THROWS_AS(cat_state({3, kPi / 2}), NumericError);
  CHECK_NOTHROW(cat_state({4, kPi / 2}));
}

TEST_CASE("variant names round-trip") {
  for (auto v : {CatVariant::standard, CatVariant::z_basis_ghz, CatVariant::zero_and_tilted}) {
    CHECK(parse_variant(to_string(v)) == v);
  }
  CHECK_THROWS_AS(parse_variant("ghz"), InvalidArgument);
}
