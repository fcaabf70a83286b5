#pragma once

#include <vector>

#include "catneg/linalg.hpp"

namespace catneg {

/// Bipartition of N qubits. `subset` is the transposed side.
struct PartitionSpec {
  int n_qubits = 0;
  std::vector<int> subset;

  /// The first k qubits {0, ..., k-1}.
  static PartitionSpec first_k(int n_qubits, int k);

  int k() const { return static_cast<int>(subset.size()); }
  /// min(k, N - k): sizes are reported for the smaller side.
  int reported_k() const;
  /// Index-bit mask of the subset (qubit q <-> bit N-1-q).
  Eigen::Index mask() const;
  PartitionSpec complement() const;
};

void validate(const PartitionSpec& part);

struct NegativityOptions {
  double eps_rel = 1e-11;        // negative threshold, scaled by max|lambda|
  double group_rel_tol = 1e-8;   // degeneracy grouping tolerance
};

struct NegativityReport {
  double value = 0.0;                       // sum of |negative eigenvalues|
  std::vector<double> negative_eigenvalues; // ascending, all < -epsilon_used
  DegeneracyGroups groups;                  // of the negative part only
  double epsilon_used = 0.0;
};

/// out[(aS,aR),(bS,bR)] = rho[(bS,aR),(aS,bR)].
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartitionSpec& part);

NegativityReport negativity(const ComplexMatrix& rho, const PartitionSpec& part,
                            const NegativityOptions& opts = {});

/// Same analysis starting from an already computed spectrum of rho^T_S.
NegativityReport negativity_from_spectrum(const Spectrum& pt_spectrum,
                                          const NegativityOptions& opts = {});

DegeneracyGroups negative_structure(const ComplexMatrix& rho, const PartitionSpec& part,
                                    const NegativityOptions& opts = {});

}  // namespace catneg
