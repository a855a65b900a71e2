#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qparl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kImag{0.0, 1.0};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// AB - BA and AB + BA. Throw on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& m);

// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// An N-mode ladder family on C^(2^N). Mode 1 is the leftmost (most
// significant) tensor factor. Two constructions exist (see the builders);
// both satisfy the same-mode relations {a_j, a_j^dag} = 1 and a_j^2 = 0.
struct LadderSet {
  int n_modes = 0;
  std::vector<ComplexMatrix> lowering;  // a_j
  std::vector<ComplexMatrix> raising;   // a_j^dag

  int dim() const { return 1 << n_modes; }

  // 1-based accessors so model code reads like the formulas.
  const ComplexMatrix& a(int mode) const { return lowering.at(static_cast<size_t>(mode) - 1); }
  const ComplexMatrix& adag(int mode) const { return raising.at(static_cast<size_t>(mode) - 1); }
};

// Fermionic (Jordan-Wigner) family: a_j = Z^(j-1) (x) a (x) I^(N-j), so
// operators of distinct modes anticommute and the full CAR holds.
// Supported mode counts: 1..12 (dense 2^N storage).
LadderSet build_ladder_set(int n_modes);

// Mode-local family: a_j = I^(j-1) (x) a (x) I^(N-j), no parity strings.
// Operators of distinct modes commute. This is the family the scenario
// engines assemble Hamiltonians and Lindblad operators from: each per-mode
// term then acts on its own tensor slot only, so an uncoupled mode is never
// touched by another mode's dissipation.
LadderSet build_local_ladder_set(int n_modes);

}  // namespace qparl
