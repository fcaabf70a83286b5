#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "catneg/linalg.hpp"

namespace catneg {

enum class CatVariant {
  standard,         // phi1(theta)^N + phi2(theta)^N
  z_basis_ghz,      // |0>^N + |1>^N
  zero_and_tilted,  // |0>^N + (cos theta0 |0> + sin theta0 |1>)^N
};

std::string_view to_string(CatVariant v);
CatVariant parse_variant(std::string_view s);

struct CatStateSpec {
  int n_qubits = 2;
  double theta0 = 0.0;  // radians, [0, pi/2]
  double width = 0.0;   // s; 0 selects the delta form
  CatVariant variant = CatVariant::standard;
};

struct QuadratureSpec {
  int node_count = 61;             // odd, >= 3
  double support_halfwidth = 6.0;  // in units of the width s
};

/// Amplitudes over the computational basis. Index b's binary digits are the
/// qubit values with qubit 0 as the most significant bit.
struct StateVector {
  int n_qubits = 0;
  ComplexVector amplitudes;
};

enum class Sign { plus, minus };

/// (cos theta, +-sin theta).
std::array<double, 2> single_qubit_state(double theta, Sign sign);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int node_count);

/// Throws InvalidArgument (or CapacityError for N above max_qubits).
void validate(const CatStateSpec& spec, int max_qubits = kDefaultMaxQubits);
void validate(const QuadratureSpec& quad);

/// Normalized cat state. The quadrature spec is required when width > 0 and
/// ignored when width == 0; a Gaussian width is only defined for the
/// standard variant.
StateVector cat_state(const CatStateSpec& spec,
                      const std::optional<QuadratureSpec>& quad = std::nullopt,
                      int max_qubits = kDefaultMaxQubits);

/// |v><v|.
ComplexMatrix density_from_state(const StateVector& v);

}  // namespace catneg
