#include "qparl/trajectories.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qparl/errors.hpp"
#include "qparl/observables.hpp"

namespace qparl {

JumpProbabilities jump_probabilities(const ComplexVector& psi, double dt,
                                     const std::vector<LindbladTerm>& terms) {
  if (!(dt > 0.0)) throw std::invalid_argument("jump_probabilities: dt must be > 0");
  JumpProbabilities probs;
  probs.p_jump.reserve(terms.size());
  double total = 0.0;
  for (const auto& t : terms) {
    const double p = dt * (t.op * psi).squaredNorm();
    probs.p_jump.push_back(p);
    total += p;
  }
  if (total > 1.0) {
    throw NumericError("dt too large for jump scheme (sum of jump probabilities " +
                       std::to_string(total) + " > 1)");
  }
  probs.p_drift = 1.0 - total;
  return probs;
}

ComplexMatrix drift_operator(double dt, const ComplexMatrix& h,
                             const std::vector<LindbladTerm>& terms) {
  ComplexMatrix drift = ComplexMatrix::Identity(h.rows(), h.cols()) - kImag * dt * h;
  for (const auto& t : terms) {
    drift -= (0.5 * dt) * (t.op.adjoint() * t.op);
  }
  return drift;
}

void trajectory_step_prepared(Trajectory& traj, double dt, const ComplexMatrix& drift,
                              const std::vector<LindbladTerm>& terms, double uniform_draw) {
  const JumpProbabilities probs = jump_probabilities(traj.psi, dt, terms);
  int chosen = -1;
  double acc = 0.0;
  for (size_t j = 0; j < probs.p_jump.size(); ++j) {
    acc += probs.p_jump[j];
    if (uniform_draw < acc) {
      chosen = static_cast<int>(j);
      break;
    }
  }

  if (chosen >= 0) {
    const auto& term = terms[static_cast<size_t>(chosen)];
    ComplexVector target = term.op * traj.psi;
    const double norm = target.norm();
    if (!(norm > 0.0)) {
      throw NumericError("jump target has zero norm for term '" + term.label + "'");
    }
    traj.psi = target / norm;
    traj.jump_log.push_back({traj.time + dt, term.label});
  } else {
    ComplexVector next = drift * traj.psi;
    traj.psi = next / next.norm();
  }
  traj.time += dt;
}

void trajectory_step(Trajectory& traj, double dt, const ComplexMatrix& h,
                     const std::vector<LindbladTerm>& terms, double uniform_draw) {
  trajectory_step_prepared(traj, dt, drift_operator(dt, h, terms), terms, uniform_draw);
}

TimeSeries ensemble_average(const ScenarioConfig& cfg, int n_traj, std::uint64_t base_seed,
                            std::vector<ComplexVector>* endpoint_states) {
  validate(cfg);
  if (n_traj < 1) throw ConfigError("n_traj must be >= 1");

  const LadderSet ops = build_local_ladder_set(cfg.n_modes);
  const ComplexMatrix h = build_hamiltonian(cfg, ops);
  const std::vector<LindbladTerm> terms = build_lindblads(cfg, ops);
  const ComplexMatrix drift = drift_operator(cfg.dt, h, terms);
  const ComplexVector psi0 = initial_vector(cfg);
  const Eigen::Index dim = psi0.size();

  const std::vector<long> samples = sample_steps(cfg);
  const long n_steps = total_steps(cfg);
  std::vector<ComplexMatrix> acc(samples.size(), ComplexMatrix::Zero(dim, dim));

  if (endpoint_states) {
    endpoint_states->clear();
    endpoint_states->reserve(static_cast<size_t>(n_traj));
  }

  for (int i = 0; i < n_traj; ++i) {
    Trajectory traj;
    traj.psi = psi0;
    traj.seed = base_seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(traj.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    size_t next = 0;
    for (long k = 0; k <= n_steps; ++k) {
      if (next < samples.size() && samples[next] == k) {
        acc[next].noalias() += traj.psi * traj.psi.adjoint();
        ++next;
      }
      if (k < n_steps) {
        trajectory_step_prepared(traj, cfg.dt, drift, terms, uniform(rng));
        traj.time = static_cast<double>(k + 1) * cfg.dt;
      }
    }
    if (endpoint_states) endpoint_states->push_back(traj.psi);
  }

  TimeSeries series;
  series.mean_yes.resize(static_cast<size_t>(cfg.n_modes));
  for (size_t s = 0; s < samples.size(); ++s) {
    const ComplexMatrix rho = acc[s] / static_cast<double>(n_traj);
    series.times.push_back(static_cast<double>(samples[s]) * cfg.dt);
    for (int j = 1; j <= cfg.n_modes; ++j) {
      series.mean_yes[static_cast<size_t>(j - 1)].push_back(mean_yes(rho, j, cfg.n_modes));
    }
    series.entropy.push_back(entropy(rho));
    series.purity.push_back(purity(rho));
  }
  return series;
}

ComplexVector perturbative_jump_state(const ComplexVector& psi0, double dt, PairCoupling kind,
                                      double strength) {
  if (psi0.size() != 4) {
    throw std::invalid_argument("perturbative_jump_state: expects a two-mode state (dim 4)");
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("perturbative_jump_state: psi0 must be unit-norm");
  }
  const LadderSet ops = build_local_ladder_set(2);
  const ComplexMatrix coupling =
      (kind == PairCoupling::Cooperative)
          ? ComplexMatrix(strength * (ops.adag(1) * ops.a(2) + ops.adag(2) * ops.a(1)))
          : ComplexMatrix(strength * (ops.adag(1) * ops.adag(2) + ops.a(2) * ops.a(1)));

  const ComplexVector drifted =
      psi0 - kImag * dt * (coupling * psi0);
  const ComplexVector jumped = ops.a(1) * drifted;
  const double norm = jumped.norm();
  if (!(norm > 1e-14)) {
    throw NumericError("no jump support: a_1 annihilates the drifted state");
  }
  return jumped / norm;
}

}  // namespace qparl
