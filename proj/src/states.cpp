#include "catneg/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "catneg/error.hpp"

namespace catneg {

std::string_view to_string(CatVariant v) {
  switch (v) {
    case CatVariant::standard: return "standard";
    case CatVariant::z_basis_ghz: return "zbasis";
    case CatVariant::zero_and_tilted: return "zerotilted";
  }
  return "?";
}

CatVariant parse_variant(std::string_view s) {
  if (s == "standard") return CatVariant::standard;
  if (s == "zbasis") return CatVariant::z_basis_ghz;
  if (s == "zerotilted") return CatVariant::zero_and_tilted;
  throw InvalidArgument("unknown variant '" + std::string(s) +
                        "' (expected standard, zbasis or zerotilted)");
}

std::array<double, 2> single_qubit_state(double theta, Sign sign) {
  const double s = std::sin(theta);
  return {std::cos(theta), sign == Sign::plus ? s : -s};
}

QuadratureRule gauss_legendre(int node_count) {
  if (node_count < 1) throw InvalidArgument("gauss_legendre: node_count must be >= 1");
  const auto n = static_cast<std::size_t>(node_count);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Tricomi initial guess; roots are
  // symmetric so only half are solved for.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void validate(const CatStateSpec& spec, int max_qubits) {
  if (spec.n_qubits < 2) {
    throw InvalidArgument("n_qubits must be >= 2, got " + std::to_string(spec.n_qubits));
  }
  if (spec.n_qubits > max_qubits) {
    throw CapacityError("n_qubits = " + std::to_string(spec.n_qubits) +
                        " exceeds the capacity cap of " + std::to_string(max_qubits));
  }
  if (!(spec.theta0 >= 0.0 && spec.theta0 <= std::numbers::pi / 2)) {
    throw InvalidArgument("theta0 must lie in [0, pi/2], got " + std::to_string(spec.theta0));
  }
  if (!(spec.width >= 0.0) || !std::isfinite(spec.width)) {
    throw InvalidArgument("width s must be finite and >= 0");
  }
  if (spec.width > 0.0 && spec.variant != CatVariant::standard) {
    throw InvalidArgument("a Gaussian width is only defined for the standard variant");
  }
}

void validate(const QuadratureSpec& quad) {
  if (quad.node_count < 3 || quad.node_count % 2 == 0) {
    throw InvalidArgument("quadrature node_count must be odd and >= 3, got " +
                          std::to_string(quad.node_count));
  }
  if (!(quad.support_halfwidth > 0.0)) {
    throw InvalidArgument("quadrature support_halfwidth must be positive");
  }
}

namespace {

// Symmetric states: the amplitude depends only on the Hamming weight w of the
// basis index, so each is described by N+1 numbers.
using WeightProfile = std::vector<double>;

// alpha^(N-w) beta^w for a product state (alpha, beta)^N.
WeightProfile product_profile(int n, double alpha, double beta) {
  WeightProfile p(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    p[static_cast<std::size_t>(w)] = std::pow(alpha, n - w) * std::pow(beta, w);
  }
  return p;
}

void accumulate(WeightProfile& acc, const WeightProfile& p, double scale) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += scale * p[i];
}

WeightProfile standard_profile(int n, double theta) {
  const auto a = single_qubit_state(theta, Sign::plus);
  const auto b = single_qubit_state(theta, Sign::minus);
  WeightProfile p = product_profile(n, a[0], a[1]);
  accumulate(p, product_profile(n, b[0], b[1]), 1.0);
  return p;
}

StateVector expand(int n, const WeightProfile& profile) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  StateVector v{n, ComplexVector(dim)};
  for (Eigen::Index b = 0; b < dim; ++b) {
    v.amplitudes(b) = profile[static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(b)))];
  }
  const double norm = v.amplitudes.norm();
  if (!(norm >= 1e-14)) {
    throw NumericError("cat state has vanishing norm " + std::to_string(norm) +
                       " (the two branches cancel)");
  }
  v.amplitudes /= norm;
  return v;
}

}  // namespace

StateVector cat_state(const CatStateSpec& spec, const std::optional<QuadratureSpec>& quad,
                      int max_qubits) {
  validate(spec, max_qubits);
  const int n = spec.n_qubits;

  switch (spec.variant) {
    case CatVariant::z_basis_ghz: {
      WeightProfile p(static_cast<std::size_t>(n) + 1, 0.0);
      p.front() = 1.0;
      p.back() += 1.0;
      return expand(n, p);
    }
    case CatVariant::zero_and_tilted: {
      WeightProfile p = product_profile(n, 1.0, 0.0);
      const auto t = single_qubit_state(spec.theta0, Sign::plus);
      accumulate(p, product_profile(n, t[0], t[1]), 1.0);
      return expand(n, p);
    }
    case CatVariant::standard:
      break;
  }

  if (spec.width == 0.0) return expand(n, standard_profile(n, spec.theta0));

  if (!quad) throw InvalidArgument("a Gaussian width requires a quadrature spec");
  validate(*quad);
  const QuadratureRule rule = gauss_legendre(quad->node_count);
  const double s = spec.width;
  const double half = quad->support_halfwidth * s;
  const double density_norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * s * s);
  WeightProfile acc(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double theta = spec.theta0 + half * rule.nodes[j];
    const double d = theta - spec.theta0;
    const double f = density_norm * std::exp(-d * d / (2.0 * s * s));
    accumulate(acc, standard_profile(n, theta), half * rule.weights[j] * f);
  }
  return expand(n, acc);
}

ComplexMatrix density_from_state(const StateVector& v) {
  return v.amplitudes * v.amplitudes.adjoint();
}

}  // namespace catneg
