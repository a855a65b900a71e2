#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qparl/integrator.hpp"

namespace qparl {

struct JumpRecord {
  double time;
  std::string label;
};

// One stochastic pure-state trajectory. The state stays unit-norm after
// every step.
struct Trajectory {
  ComplexVector psi;
  double time = 0.0;
  std::uint64_t seed = 0;
  std::vector<JumpRecord> jump_log;
};

struct JumpProbabilities {
  double p_drift;
  std::vector<double> p_jump;  // dt * ||L_j psi||^2 per term
};

// Throws NumericError when the jump probabilities sum above 1 (dt too large
// for the first-order scheme).
JumpProbabilities jump_probabilities(const ComplexVector& psi, double dt,
                                     const std::vector<LindbladTerm>& terms);

// 1 - i dt H - (dt/2) sum_j L_j^dag L_j: the no-jump evolution operator.
ComplexMatrix drift_operator(double dt, const ComplexMatrix& h,
                             const std::vector<LindbladTerm>& terms);

// Advance one step: jump to L_j psi / ||L_j psi|| with probability p_jump[j]
// (selected by the supplied uniform draw, logged), otherwise apply the
// normalized drift.
void trajectory_step(Trajectory& traj, double dt, const ComplexMatrix& h,
                     const std::vector<LindbladTerm>& terms, double uniform_draw);

// Same step with the drift operator precomputed.
void trajectory_step_prepared(Trajectory& traj, double dt, const ComplexMatrix& drift,
                              const std::vector<LindbladTerm>& terms, double uniform_draw);

// Average of |psi><psi| over n_traj trajectories on the configured sample
// grid. Trajectory i draws from a generator seeded with base_seed + i, so a
// fixed seed reproduces the run bit-identically. Optionally collects each
// trajectory's endpoint state for error estimation.
TimeSeries ensemble_average(const ScenarioConfig& cfg, int n_traj, std::uint64_t base_seed,
                            std::vector<ComplexVector>* endpoint_states = nullptr);

enum class PairCoupling { Cooperative, NonCooperative };

// First-order prediction for a two-mode jump: apply 1 - i dt H_x with H_x the
// cooperative (exchange) or non-cooperative (pair) coupling of the given
// strength, then the normalized mode-1 lowering jump. Test oracle for the
// small-dt limit.
ComplexVector perturbative_jump_state(const ComplexVector& psi0, double dt, PairCoupling kind,
                                      double strength);

}  // namespace qparl
