#pragma once

#include <functional>
#include <vector>

#include "qparl/model.hpp"
#include "qparl/timeseries.hpp"

namespace qparl {

// GKSL right-hand side: -i[H, rho] + sum_j (L_j rho L_j^dag - 1/2 {L_j^dag L_j, rho}).
// With no terms this is the Von Neumann equation.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<LindbladTerm>& terms);

// Physicality gate: unit trace within 1e-8, Hermiticity residual below 1e-10,
// smallest eigenvalue above -1e-8. Violations throw NumericError with the
// offending diagnostic.
void check_physical(const DensityState& state);

// One classical RK4 step. The result is re-Hermitized as (rho + rho^dag)/2
// before the physicality gate runs.
DensityState step_rk4(const DensityState& state, double dt, const ComplexMatrix& h,
                      const std::vector<LindbladTerm>& terms);

using SampleCallback = std::function<void(const DensityState&)>;

// Fixed-step RK4 integration from t = 0 to t_end, sampling every
// sample_stride steps (the endpoint is always sampled).
TimeSeries evolve(const ScenarioConfig& cfg, const SampleCallback& on_sample = {});

// The matrix M with vec(d rho/dt) = M vec(rho) under column-stacking
// vectorization. Guarded to total dimension dim^2 <= 4096.
ComplexMatrix build_superoperator(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms);

// Exact propagation rho(t) = unvec(exp(M t) vec(rho(0))) on the same sample
// grid as evolve; the independent oracle for the RK4 engine.
TimeSeries evolve_exact(const ScenarioConfig& cfg, const SampleCallback& on_sample = {});

// Step indices sampled by both engines: multiples of sample_stride plus the
// final step.
std::vector<long> sample_steps(const ScenarioConfig& cfg);
long total_steps(const ScenarioConfig& cfg);

}  // namespace qparl
