#include "qparl/algebra.hpp"

#include <stdexcept>
#include <string>

#include "qparl/errors.hpp"

namespace qparl {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

static void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

LadderSet build_family(int n_modes, bool with_parity_strings) {
  if (n_modes < 1 || n_modes > 12) {
    throw ConfigError("unsupported mode count " + std::to_string(n_modes) +
                      " (supported range is 1..12)");
  }

  // Single-mode blocks in the (e_0, e_1) basis: the lowering operator maps
  // e_1 to e_0, and Z is the parity sign carried past already-placed modes.
  ComplexMatrix lower2 = ComplexMatrix::Zero(2, 2);
  lower2(0, 1) = 1.0;
  ComplexMatrix parity2 = ComplexMatrix::Zero(2, 2);
  parity2(0, 0) = 1.0;
  parity2(1, 1) = -1.0;
  ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);

  LadderSet set;
  set.n_modes = n_modes;
  set.lowering.reserve(static_cast<size_t>(n_modes));
  set.raising.reserve(static_cast<size_t>(n_modes));
  for (int j = 1; j <= n_modes; ++j) {
    ComplexMatrix op = ComplexMatrix::Identity(1, 1);
    for (int k = 1; k <= n_modes; ++k) {
      const ComplexMatrix& factor =
          (k == j) ? lower2 : (with_parity_strings && k < j) ? parity2 : id2;
      op = kron(op, factor);
    }
    set.lowering.push_back(op);
    set.raising.push_back(op.adjoint());
  }
  return set;
}

}  // namespace

LadderSet build_ladder_set(int n_modes) {
  return build_family(n_modes, /*with_parity_strings=*/true);
}

LadderSet build_local_ladder_set(int n_modes) {
  return build_family(n_modes, /*with_parity_strings=*/false);
}

}  // namespace qparl
