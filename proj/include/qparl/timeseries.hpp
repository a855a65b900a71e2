#pragma once

#include <vector>

#include "qparl/algebra.hpp"

namespace qparl {

// A density matrix tagged with its evolution time.
struct DensityState {
  double time = 0.0;
  ComplexMatrix rho;
};

// Observables sampled along one run.
struct TimeSeries {
  std::vector<double> times;
  std::vector<std::vector<double>> mean_yes;  // [mode][sample]
  std::vector<double> entropy;
  std::vector<double> purity;

  int n_modes() const { return static_cast<int>(mean_yes.size()); }
  size_t n_samples() const { return times.size(); }
};

// Mean of the trailing `fraction` of samples; the plateau read-off used for
// asymptotic values.
double tail_mean(const std::vector<double>& series, double fraction = 0.1);

// Largest |a - b| over every sampled observable. Series must share the grid.
double max_abs_deviation(const TimeSeries& a, const TimeSeries& b);

}  // namespace qparl
