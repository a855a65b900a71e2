#pragma once

#include "qparl/algebra.hpp"

namespace qparl {

// I x ... x |e_0><e_0| x ... x I with the yes-projector in tensor slot `mode`
// (1-based, mode 1 leftmost).
ComplexMatrix yes_projector(int mode, int n_modes);

// Tr[rho * yes_projector(mode)]: the probability-like measure of mode `mode`
// voting yes. mean_no is the complementary projector's mean, computed
// independently so the two can be cross-checked.
double mean_yes(const ComplexMatrix& rho, int mode, int n_modes);
double mean_no(const ComplexMatrix& rho, int mode, int n_modes);

// Von Neumann entropy -sum lambda ln lambda (natural log); eigenvalues at or
// below 1e-12 contribute zero.
double entropy(const ComplexMatrix& rho);

// Tr(rho^2).
double purity(const ComplexMatrix& rho);

// (1/2) Tr |a - b| for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// ||a - b|| for unit vectors; rejects non-normalized input.
double vector_distance(const ComplexVector& a, const ComplexVector& b);

}  // namespace qparl
