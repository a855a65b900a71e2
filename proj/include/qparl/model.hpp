#pragma once

#include <string>
#include <vector>

#include "qparl/algebra.hpp"
#include "qparl/scenario.hpp"
#include "qparl/timeseries.hpp"

namespace qparl {

// One dissipative channel: a strength-scaled ladder operator, traceless by
// construction. The label identifies the channel in jump logs.
struct LindbladTerm {
  std::string label;
  ComplexMatrix op;
};

// H = sum_k omega_k a_k^dag a_k + sum_k lambda_k (a_k^dag + a_k)
//   + [n=2] gamma_c (a_1^dag a_2 + a_2^dag a_1) + gamma_nc (a_1^dag a_2^dag + a_2 a_1)
//   + [n=3] cubic couplings gamma_1..gamma_4 plus hermitian conjugates.
ComplexMatrix build_hamiltonian(const ScenarioConfig& cfg, const LadderSet& ops);

// The nonzero-strength channels among tau1 a_1, tau2 a_1^dag, kappa a_2^dag.
std::vector<LindbladTerm> build_lindblads(const ScenarioConfig& cfg, const LadderSet& ops);

// Product state: each mode contributes sqrt(p) e_0 + e^{i phi} sqrt(1-p) e_1.
ComplexVector initial_vector(const ScenarioConfig& cfg);

// rho(0) = |psi><psi| at time zero.
DensityState build_initial_state(const ScenarioConfig& cfg);

}  // namespace qparl
