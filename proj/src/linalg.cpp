#include "catneg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catneg/error.hpp"

namespace catneg {

std::size_t DegeneracyGroups::total() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.multiplicity;
  return n;
}

std::vector<std::size_t> DegeneracyGroups::multiplicities() const {
  std::vector<std::size_t> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.multiplicity);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > max_dim || cols > max_dim) {
    std::ostringstream os;
    os << "kron: result dimension " << rows << "x" << cols << " exceeds cap " << max_dim;
    throw CapacityError(os.str());
  }
  ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Asymmetry hermitian_asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  Asymmetry worst;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double d = std::abs(m(i, j) - std::conj(m(j, i)));
      if (d > worst.value) worst = {d, i, j};
    }
  }
  return worst;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  const Asymmetry asym = hermitian_asymmetry(m);
  const double scale = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
  if (asym.value > kHermitianTolerance * scale) {
    std::ostringstream os;
    os.precision(6);
    os << "matrix is not Hermitian: |M(" << asym.row << "," << asym.col << ") - conj(M("
       << asym.col << "," << asym.row << "))| = " << asym.value << " exceeds "
       << kHermitianTolerance << " * max|M| = " << kHermitianTolerance * scale;
    throw NumericError(os.str());
  }
  return (m + m.adjoint()) * 0.5;
}

namespace {

bool is_real(const ComplexMatrix& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = symmetrized(m);
  Spectrum s;
  if (is_real(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    s.eigenvalues = to_vector(solver.eigenvalues());
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    s.eigenvalues = to_vector(solver.eigenvalues());
  }
  // Eigen already sorts; kept explicit because callers rely on it.
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  const ComplexMatrix h = symmetrized(m);
  Eigensystem es;
  if (is_real(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real());
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    es.spectrum.eigenvalues = to_vector(solver.eigenvalues());
    es.eigenvectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    es.spectrum.eigenvalues = to_vector(solver.eigenvalues());
    es.eigenvectors = solver.eigenvectors();
  }
  double residual = 0.0;
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    const double lambda = es.spectrum.eigenvalues[static_cast<std::size_t>(j)];
    const double r = (h * es.eigenvectors.col(j) - lambda * es.eigenvectors.col(j)).norm();
    residual = std::max(residual, r / std::max(1.0, std::abs(lambda)));
  }
  es.spectrum.residual = residual;
  return es;
}

DegeneracyGroups group_degenerate(const std::vector<double>& values, double rel_tol) {
  if (!(rel_tol > 0.0)) throw InvalidArgument("group_degenerate: rel_tol must be positive");
  DegeneracyGroups out;
  if (values.empty()) return out;
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double tol = rel_tol * scale;

  double sum = values.front();
  std::size_t count = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] <= tol) {
      sum += values[i];
      ++count;
    } else {
      out.groups.push_back({sum / static_cast<double>(count), count});
      sum = values[i];
      count = 1;
    }
  }
  out.groups.push_back({sum / static_cast<double>(count), count});
  return out;
}

DegeneracyGroups group_degenerate(const Spectrum& s, double rel_tol) {
  return group_degenerate(s.eigenvalues, rel_tol);
}

int qubit_count(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw InvalidArgument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

}  // namespace catneg
