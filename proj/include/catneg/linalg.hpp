#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace catneg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest matrix dimension any routine will build unless told otherwise
/// (14 qubits).
inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 14;
inline constexpr int kDefaultMaxQubits = 14;

/// Asymmetry above this fraction of max|M| is treated as a bug, not noise.
inline constexpr double kHermitianTolerance = 1e-10;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::optional<double> residual;   // max ||Mv - lv||, when eigenvectors were computed
};

struct DegeneracyGroup {
  double value = 0.0;  // mean of the merged eigenvalues
  std::size_t multiplicity = 0;

  friend bool operator==(const DegeneracyGroup&, const DegeneracyGroup&) = default;
};

struct DegeneracyGroups {
  std::vector<DegeneracyGroup> groups;

  std::size_t total() const;
  std::vector<std::size_t> multiplicities() const;
};

/// Kronecker product. Entry (i*b.rows()+k, j*b.cols()+l) = a(i,j)*b(k,l).
/// Throws CapacityError when the result would exceed `max_dim` rows.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = kDefaultMaxDim);

/// Largest |M(i,j) - conj(M(j,i))| together with its location.
struct Asymmetry {
  double value = 0.0;
  Eigen::Index row = 0;
  Eigen::Index col = 0;
};
Asymmetry hermitian_asymmetry(const ComplexMatrix& m);

/// Returns (M + M^dagger)/2 after checking that the asymmetry is below
/// kHermitianTolerance * max|M|. Throws NumericError naming the worst entry
/// pair otherwise.
ComplexMatrix symmetrized(const ComplexMatrix& m);

/// All eigenvalues of a Hermitian matrix, ascending. Purely real input is
/// routed through the real symmetric solver.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

struct Eigensystem {
  Spectrum spectrum;
  ComplexMatrix eigenvectors;  // columns match spectrum.eigenvalues
};

/// Eigenvalues plus eigenvectors; spectrum.residual is filled in.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Merges adjacent sorted eigenvalues closer than rel_tol * max|lambda|.
DegeneracyGroups group_degenerate(const Spectrum& s, double rel_tol = 1e-8);
DegeneracyGroups group_degenerate(const std::vector<double>& sorted_values,
                                  double rel_tol = 1e-8);

/// Number of qubits for a 2^N dimension; throws InvalidArgument otherwise.
int qubit_count(Eigen::Index dim);

}  // namespace catneg
