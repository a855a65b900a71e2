#include "qparl/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qparl/errors.hpp"
#include "qparl/observables.hpp"

namespace qparl {

namespace {

void require_square_same(const ComplexMatrix& rho, const ComplexMatrix& h,
                         const std::vector<LindbladTerm>& terms) {
  if (rho.rows() != rho.cols() || h.rows() != h.cols() || rho.rows() != h.rows()) {
    throw std::invalid_argument("lindblad_rhs: rho and H must be square with equal dims");
  }
  for (const auto& t : terms) {
    if (t.op.rows() != rho.rows() || t.op.cols() != rho.cols()) {
      throw std::invalid_argument("lindblad_rhs: operator '" + t.label + "' dimension mismatch");
    }
  }
}

struct SampleRecorder {
  TimeSeries series;
  int n_modes;
  const SampleCallback& callback;

  SampleRecorder(int modes, const SampleCallback& cb) : n_modes(modes), callback(cb) {
    series.mean_yes.resize(static_cast<size_t>(modes));
  }

  void record(const DensityState& state) {
    check_physical(state);
    series.times.push_back(state.time);
    for (int j = 1; j <= n_modes; ++j) {
      series.mean_yes[static_cast<size_t>(j - 1)].push_back(mean_yes(state.rho, j, n_modes));
    }
    series.entropy.push_back(entropy(state.rho));
    series.purity.push_back(purity(state.rho));
    if (callback) callback(state);
  }
};

}  // namespace

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<LindbladTerm>& terms) {
  require_square_same(rho, h, terms);
  ComplexMatrix out = -kImag * (h * rho - rho * h);
  for (const auto& t : terms) {
    const ComplexMatrix ldag_l = t.op.adjoint() * t.op;
    out += t.op * rho * t.op.adjoint() - 0.5 * (ldag_l * rho + rho * ldag_l);
  }
  return out;
}

void check_physical(const DensityState& state) {
  const auto fail = [&](const std::string& what) {
    throw NumericError("unphysical state: reduce dt (" + what + " at t=" +
                       std::to_string(state.time) + ")");
  };
  const double trace_err = std::abs(state.rho.trace().real() - 1.0) +
                           std::abs(state.rho.trace().imag());
  if (!(trace_err < 1e-8)) fail("trace deviates from 1 by " + std::to_string(trace_err));
  const double herm = (state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm < 1e-10)) fail("Hermiticity residual " + std::to_string(herm));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(state.rho, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (!(min_eig > -1e-8)) fail("negative eigenvalue " + std::to_string(min_eig));
  if (!all_finite(state.rho)) fail("non-finite entry");
}

DensityState step_rk4(const DensityState& state, double dt, const ComplexMatrix& h,
                      const std::vector<LindbladTerm>& terms) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be > 0");
  const ComplexMatrix k1 = lindblad_rhs(state.rho, h, terms);
  const ComplexMatrix k2 = lindblad_rhs(state.rho + 0.5 * dt * k1, h, terms);
  const ComplexMatrix k3 = lindblad_rhs(state.rho + 0.5 * dt * k2, h, terms);
  const ComplexMatrix k4 = lindblad_rhs(state.rho + dt * k3, h, terms);

  DensityState next;
  next.time = state.time + dt;
  next.rho = state.rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  next.rho = ((next.rho + next.rho.adjoint()) / 2.0).eval();
  check_physical(next);
  return next;
}

long total_steps(const ScenarioConfig& cfg) {
  return std::max<long>(1, std::lround(cfg.t_end / cfg.dt));
}

std::vector<long> sample_steps(const ScenarioConfig& cfg) {
  const long n = total_steps(cfg);
  std::vector<long> steps;
  for (long k = 0; k <= n; k += cfg.sample_stride) steps.push_back(k);
  if (steps.back() != n) steps.push_back(n);
  return steps;
}

TimeSeries evolve(const ScenarioConfig& cfg, const SampleCallback& on_sample) {
  validate(cfg);
  const LadderSet ops = build_local_ladder_set(cfg.n_modes);
  const ComplexMatrix h = build_hamiltonian(cfg, ops);
  const std::vector<LindbladTerm> terms = build_lindblads(cfg, ops);

  DensityState state = build_initial_state(cfg);
  const std::vector<long> samples = sample_steps(cfg);
  const long n_steps = total_steps(cfg);

  SampleRecorder rec(cfg.n_modes, on_sample);
  size_t next = 0;
  for (long k = 0; k <= n_steps; ++k) {
    if (next < samples.size() && samples[next] == k) {
      rec.record(state);
      ++next;
    }
    if (k < n_steps) {
      state = step_rk4(state, cfg.dt, h, terms);
      state.time = static_cast<double>(k + 1) * cfg.dt;  // keep the grid exact
    }
  }
  return rec.series;
}

ComplexMatrix build_superoperator(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms) {
  if (h.rows() != h.cols()) throw std::invalid_argument("build_superoperator: H must be square");
  const Eigen::Index dim = h.rows();
  if (dim * dim > 4096) {
    throw ConfigError("superoperator dimension guard exceeded (dim^2 = " +
                      std::to_string(dim * dim) + " > 4096)");
  }
  for (const auto& t : terms) {
    if (t.op.rows() != dim || t.op.cols() != dim) {
      throw std::invalid_argument("build_superoperator: operator '" + t.label +
                                  "' dimension mismatch");
    }
  }
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  // Column-stacking: vec(A X B) = (B^T kron A) vec(X).
  ComplexMatrix m = -kImag * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& t : terms) {
    const ComplexMatrix ldag_l = t.op.adjoint() * t.op;
    m += kron(t.op.conjugate(), t.op);
    m -= 0.5 * kron(id, ldag_l);
    m -= 0.5 * kron(ldag_l.transpose(), id);
  }
  return m;
}

TimeSeries evolve_exact(const ScenarioConfig& cfg, const SampleCallback& on_sample) {
  validate(cfg);
  const LadderSet ops = build_local_ladder_set(cfg.n_modes);
  const ComplexMatrix h = build_hamiltonian(cfg, ops);
  const std::vector<LindbladTerm> terms = build_lindblads(cfg, ops);
  const ComplexMatrix superop = build_superoperator(h, terms);
  const Eigen::Index dim = h.rows();

  const std::vector<long> samples = sample_steps(cfg);

  // One exponential per distinct inter-sample gap (the stride, plus at most
  // one trailing remainder).
  ComplexMatrix stride_prop;
  long stride_gap = -1;
  auto propagator = [&](long gap) {
    if (gap != stride_gap) {
      stride_prop = (superop * Complex(static_cast<double>(gap) * cfg.dt, 0.0)).exp();
      stride_gap = gap;
    }
    return stride_prop;
  };

  const ComplexMatrix rho0 = build_initial_state(cfg).rho;
  ComplexVector vec = Eigen::Map<const ComplexVector>(rho0.data(), dim * dim);

  SampleRecorder rec(cfg.n_modes, on_sample);
  for (size_t s = 0; s < samples.size(); ++s) {
    if (s > 0) vec = propagator(samples[s] - samples[s - 1]) * vec;
    ComplexMatrix rho = Eigen::Map<const ComplexMatrix>(vec.data(), dim, dim);
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    rec.record({static_cast<double>(samples[s]) * cfg.dt, rho});
  }
  return rec.series;
}

}  // namespace qparl
