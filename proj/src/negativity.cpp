#include "catneg/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catneg/error.hpp"

namespace catneg {

PartitionSpec PartitionSpec::first_k(int n_qubits, int k) {
  PartitionSpec p{n_qubits, {}};
  for (int q = 0; q < k; ++q) p.subset.push_back(q);
  validate(p);
  return p;
}

int PartitionSpec::reported_k() const { return std::min(k(), n_qubits - k()); }

Eigen::Index PartitionSpec::mask() const {
  Eigen::Index m = 0;
  for (int q : subset) m |= Eigen::Index{1} << (n_qubits - 1 - q);
  return m;
}

PartitionSpec PartitionSpec::complement() const {
  PartitionSpec c{n_qubits, {}};
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(subset.begin(), subset.end(), q) == subset.end()) c.subset.push_back(q);
  }
  return c;
}

void validate(const PartitionSpec& part) {
  if (part.n_qubits < 2) throw InvalidArgument("partition needs at least 2 qubits");
  if (part.subset.empty() || part.k() >= part.n_qubits) {
    throw InvalidArgument("partition subset must be a nonempty strict subset, got k = " +
                          std::to_string(part.k()) + " of N = " + std::to_string(part.n_qubits));
  }
  std::vector<int> sorted = part.subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("partition subset contains a repeated qubit");
  }
  if (sorted.front() < 0 || sorted.back() >= part.n_qubits) {
    throw InvalidArgument("partition subset index out of range");
  }
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartitionSpec& part) {
  validate(part);
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index{1} << part.n_qubits)) {
    throw InvalidArgument("density matrix dimension " + std::to_string(rho.rows()) +
                          " does not match 2^" + std::to_string(part.n_qubits));
  }
  const Eigen::Index s = part.mask();
  const Eigen::Index r = ~s;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index b = 0; b < rho.cols(); ++b) {
    for (Eigen::Index a = 0; a < rho.rows(); ++a) {
      out(a, b) = rho((b & s) | (a & r), (a & s) | (b & r));
    }
  }
  return out;
}

NegativityReport negativity_from_spectrum(const Spectrum& pt_spectrum,
                                          const NegativityOptions& opts) {
  if (!(opts.eps_rel > 0.0)) throw InvalidArgument("eps must be positive");
  NegativityReport rep;
  double scale = 0.0;
  for (double v : pt_spectrum.eigenvalues) scale = std::max(scale, std::abs(v));
  rep.epsilon_used = opts.eps_rel * scale;
  for (double v : pt_spectrum.eigenvalues) {
    if (v < -rep.epsilon_used) {
      rep.negative_eigenvalues.push_back(v);
      rep.value += -v;
    }
  }
  rep.groups = group_degenerate(rep.negative_eigenvalues, opts.group_rel_tol);
  return rep;
}

NegativityReport negativity(const ComplexMatrix& rho, const PartitionSpec& part,
                            const NegativityOptions& opts) {
  return negativity_from_spectrum(hermitian_eigenvalues(partial_transpose(rho, part)), opts);
}

DegeneracyGroups negative_structure(const ComplexMatrix& rho, const PartitionSpec& part,
                                    const NegativityOptions& opts) {
  return negativity(rho, part, opts).groups;
}

}  // namespace catneg
