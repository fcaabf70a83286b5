#include "catneg/channels.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "catneg/error.hpp"

namespace catneg {

std::string_view to_string(ChannelKind k) {
  return k == ChannelKind::dephasing ? "dephasing" : "depolarizing";
}

ChannelKind parse_channel(std::string_view s) {
  if (s == "dephasing") return ChannelKind::dephasing;
  if (s == "depolarizing") return ChannelKind::depolarizing;
  throw InvalidArgument("unknown channel '" + std::string(s) +
                        "' (expected dephasing or depolarizing)");
}

double ChannelSpec::p0() const {
  const double decay = std::exp(-gamma_t);
  return kind == ChannelKind::dephasing ? (1.0 + decay) / 2.0 : (1.0 + 3.0 * decay) / 4.0;
}

double ChannelSpec::p1() const {
  const double decay = std::exp(-gamma_t);
  return kind == ChannelKind::dephasing ? (1.0 - decay) / 2.0 : (1.0 - decay) / 4.0;
}

void validate(const ChannelSpec& c) {
  if (!(c.gamma_t >= 0.0) || std::isnan(c.gamma_t)) {
    throw InvalidArgument("gamma_t must be >= 0, got " + std::to_string(c.gamma_t));
  }
}

namespace {

void check_gamma_t(double gamma_t) { validate(ChannelSpec{ChannelKind::dephasing, gamma_t}); }

}  // namespace

void apply_single_qubit_kraus(ComplexMatrix& rho, int qubit, std::span<const Matrix2> kraus) {
  const int n = qubit_count(rho.rows());
  if (rho.cols() != rho.rows()) throw InvalidArgument("density matrix is not square");
  if (qubit < 0 || qubit >= n) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(n) + " qubits");
  }
  const Eigen::Index mask = Eigen::Index{1} << (n - 1 - qubit);
  const Eigen::Index dim = rho.rows();
  Matrix2 block;
  Matrix2 out;
  for (Eigen::Index a = 0; a < dim; ++a) {
    if (a & mask) continue;
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (b & mask) continue;
      block << rho(a, b), rho(a, b | mask), rho(a | mask, b), rho(a | mask, b | mask);
      out.setZero();
      for (const Matrix2& k : kraus) out.noalias() += k * block * k.adjoint();
      rho(a, b) = out(0, 0);
      rho(a, b | mask) = out(0, 1);
      rho(a | mask, b) = out(1, 0);
      rho(a | mask, b | mask) = out(1, 1);
    }
  }
}

ComplexMatrix apply_dephasing(const ComplexMatrix& rho, double gamma_t) {
  check_gamma_t(gamma_t);
  const int n = qubit_count(rho.rows());
  std::vector<double> attenuation(static_cast<std::size_t>(n) + 1);
  for (int h = 0; h <= n; ++h) attenuation[static_cast<std::size_t>(h)] = std::exp(-gamma_t * h);
  ComplexMatrix out = rho;
  for (Eigen::Index b = 0; b < out.cols(); ++b) {
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      out(a, b) *= attenuation[static_cast<std::size_t>(
          std::popcount(static_cast<std::uint64_t>(a ^ b)))];
    }
  }
  return out;
}

ComplexMatrix apply_depolarizing(const ComplexMatrix& rho, double gamma_t) {
  check_gamma_t(gamma_t);
  const int n = qubit_count(rho.rows());
  const ChannelSpec spec{ChannelKind::depolarizing, gamma_t};
  const double s0 = std::sqrt(spec.p0());
  const double s1 = std::sqrt(spec.p1());
  const Complex i{0.0, 1.0};
  std::array<Matrix2, 4> kraus;
  kraus[0] << s0, 0, 0, s0;
  kraus[1] << 0, s1, s1, 0;
  kraus[2] << 0, -i * s1, i * s1, 0;
  kraus[3] << s1, 0, 0, -s1;
  ComplexMatrix out = rho;
  for (int q = 0; q < n; ++q) apply_single_qubit_kraus(out, q, kraus);
  return out;
}

ComplexMatrix apply_channel(const ComplexMatrix& rho, const ChannelSpec& channel) {
  switch (channel.kind) {
    case ChannelKind::dephasing: return apply_dephasing(rho, channel.gamma_t);
    case ChannelKind::depolarizing: return apply_depolarizing(rho, channel.gamma_t);
  }
  throw InvalidArgument("unknown channel kind");
}

ComplexMatrix evolve_cat(const CatStateSpec& spec, const ChannelSpec& channel,
                         const std::optional<QuadratureSpec>& quad, int max_qubits) {
  validate(channel);
  return apply_channel(density_from_state(cat_state(spec, quad, max_qubits)), channel);
}

}  // namespace catneg
