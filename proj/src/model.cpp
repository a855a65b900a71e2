#include "qparl/model.hpp"

#include <cmath>

#include "qparl/errors.hpp"

namespace qparl {

ComplexMatrix build_hamiltonian(const ScenarioConfig& cfg, const LadderSet& ops) {
  validate(cfg);
  if (ops.n_modes != cfg.n_modes) {
    throw ConfigError("ladder set has " + std::to_string(ops.n_modes) +
                      " modes, config expects " + std::to_string(cfg.n_modes));
  }
  const int dim = ops.dim();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

  for (int k = 1; k <= cfg.n_modes; ++k) {
    const double w = cfg.omega[static_cast<size_t>(k - 1)];
    const double l = cfg.lambda[static_cast<size_t>(k - 1)];
    if (w != 0.0) h += w * (ops.adag(k) * ops.a(k));
    if (l != 0.0) h += l * (ops.adag(k) + ops.a(k));
  }

  if (cfg.n_modes == 2) {
    if (cfg.gamma_c != 0.0) {
      h += cfg.gamma_c * (ops.adag(1) * ops.a(2) + ops.adag(2) * ops.a(1));
    }
    if (cfg.gamma_nc != 0.0) {
      h += cfg.gamma_nc * (ops.adag(1) * ops.adag(2) + ops.a(2) * ops.a(1));
    }
  }

  if (cfg.n_modes == 3) {
    ComplexMatrix cubic = ComplexMatrix::Zero(dim, dim);
    if (cfg.gamma[0] != 0.0) cubic += cfg.gamma[0] * (ops.adag(1) * ops.a(2) * ops.a(3));
    if (cfg.gamma[1] != 0.0) cubic += cfg.gamma[1] * (ops.adag(1) * ops.adag(2) * ops.a(3));
    if (cfg.gamma[2] != 0.0) cubic += cfg.gamma[2] * (ops.adag(1) * ops.a(2) * ops.adag(3));
    if (cfg.gamma[3] != 0.0) cubic += cfg.gamma[3] * (ops.adag(1) * ops.adag(2) * ops.adag(3));
    h += cubic + cubic.adjoint();
  }

  // Symmetrize away round-off so the result is exactly Hermitian.
  h = ((h + h.adjoint()) / 2.0).eval();
  return h;
}

std::vector<LindbladTerm> build_lindblads(const ScenarioConfig& cfg, const LadderSet& ops) {
  validate(cfg);
  if (ops.n_modes != cfg.n_modes) {
    throw ConfigError("ladder set has " + std::to_string(ops.n_modes) +
                      " modes, config expects " + std::to_string(cfg.n_modes));
  }
  std::vector<LindbladTerm> terms;
  if (cfg.tau1 != 0.0) terms.push_back({"leader_yes_1", cfg.tau1 * ops.a(1)});
  if (cfg.tau2 != 0.0) terms.push_back({"leader_no_1", cfg.tau2 * ops.adag(1)});
  if (cfg.kappa != 0.0) terms.push_back({"leader_no_2", cfg.kappa * ops.adag(2)});
  return terms;
}

ComplexVector initial_vector(const ScenarioConfig& cfg) {
  validate(cfg);
  ComplexVector psi = ComplexVector::Ones(1);
  for (int j = 0; j < cfg.n_modes; ++j) {
    const double p = cfg.p0[static_cast<size_t>(j)];
    const double phase = cfg.phi.empty() ? 0.0 : cfg.phi[static_cast<size_t>(j)];
    ComplexVector mode(2);
    mode(0) = std::sqrt(p);
    mode(1) = std::exp(kImag * phase) * std::sqrt(1.0 - p);
    ComplexVector next(psi.size() * 2);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      next(2 * i) = psi(i) * mode(0);
      next(2 * i + 1) = psi(i) * mode(1);
    }
    psi = next;
  }
  return psi;
}

DensityState build_initial_state(const ScenarioConfig& cfg) {
  const ComplexVector psi = initial_vector(cfg);
  DensityState state;
  state.time = 0.0;
  state.rho = psi * psi.adjoint();
  return state;
}

}  // namespace qparl
