#include "qparl/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qparl {

namespace {

void require_mode(int mode, int n_modes, Eigen::Index dim) {
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  if (mode < 1 || mode > n_modes) {
    throw std::invalid_argument("mode " + std::to_string(mode) + " out of range 1.." +
                                std::to_string(n_modes));
  }
  if (dim != (Eigen::Index(1) << n_modes)) {
    throw std::invalid_argument("matrix dimension does not match 2^n_modes");
  }
}

// Sum of diagonal entries whose basis index has the given bit value in the
// slot owned by `mode`. Mode 1 owns the most significant bit.
double diagonal_mass(const ComplexMatrix& rho, int mode, int n_modes, int bit_value) {
  require_mode(mode, n_modes, rho.rows());
  const int shift = n_modes - mode;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (((i >> shift) & 1) == bit_value) sum += rho(i, i).real();
  }
  return sum;
}

}  // namespace

ComplexMatrix yes_projector(int mode, int n_modes) {
  require_mode(mode, n_modes, Eigen::Index(1) << n_modes);
  ComplexMatrix yes = ComplexMatrix::Zero(2, 2);
  yes(0, 0) = 1.0;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int k = 1; k <= n_modes; ++k) {
    out = kron(out, k == mode ? yes : ComplexMatrix::Identity(2, 2));
  }
  return out;
}

double mean_yes(const ComplexMatrix& rho, int mode, int n_modes) {
  return diagonal_mass(rho, mode, n_modes, 0);
}

double mean_no(const ComplexMatrix& rho, int mode, int n_modes) {
  return diagonal_mass(rho, mode, n_modes, 1);
}

double entropy(const ComplexMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lam : solver.eigenvalues()) {
    if (lam > 1e-12) s -= lam * std::log(lam);
  }
  return s;
}

double purity(const ComplexMatrix& rho) {
  return (rho * rho).trace().real();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double vector_distance(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector_distance: dimension mismatch");
  }
  if (std::abs(a.norm() - 1.0) > 1e-8 || std::abs(b.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("vector_distance: inputs must be unit vectors");
  }
  return (a - b).norm();
}

}  // namespace qparl
