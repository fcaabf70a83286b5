#pragma once

#include <span>
#include <string_view>

#include "catneg/linalg.hpp"
#include "catneg/states.hpp"

namespace catneg {

enum class ChannelKind { dephasing, depolarizing };

std::string_view to_string(ChannelKind k);
ChannelKind parse_channel(std::string_view s);

/// Independent per-qubit noise with dimensionless strength gamma*t.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::dephasing;
  double gamma_t = 0.0;

  /// Weight of the identity Kraus term.
  double p0() const;
  /// Weight of each Pauli term (dephasing has only Z, weight 1 - p0).
  double p1() const;
};

void validate(const ChannelSpec& c);

using Matrix2 = Eigen::Matrix2cd;

/// rho -> sum_j K_j rho K_j^dagger with every K_j acting on `qubit` only
/// (qubit 0 is the most significant index bit). Works in place on 2x2
/// blocks; the full operator is never formed.
void apply_single_qubit_kraus(ComplexMatrix& rho, int qubit, std::span<const Matrix2> kraus);

/// Each entry (a, b) scaled by exp(-gamma_t * popcount(a ^ b)); equal to
/// N sequential maps p0 rho + (1 - p0) Z rho Z.
ComplexMatrix apply_dephasing(const ComplexMatrix& rho, double gamma_t);

/// Qubit by qubit: rho -> p0 rho + p1 (X rho X + Y rho Y + Z rho Z).
ComplexMatrix apply_depolarizing(const ComplexMatrix& rho, double gamma_t);

ComplexMatrix apply_channel(const ComplexMatrix& rho, const ChannelSpec& channel);

/// density_from_state(cat_state(spec)) passed through `channel`.
ComplexMatrix evolve_cat(const CatStateSpec& spec, const ChannelSpec& channel,
                         const std::optional<QuadratureSpec>& quad = std::nullopt,
                         int max_qubits = kDefaultMaxQubits);

}  // namespace catneg
