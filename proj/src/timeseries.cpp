#include "qparl/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qparl {

double tail_mean(const std::vector<double>& series, double fraction) {
  if (series.empty()) throw std::invalid_argument("tail_mean: empty series");
  if (fraction <= 0.0 || fraction > 1.0) {
    throw std::invalid_argument("tail_mean: fraction must lie in (0, 1]");
  }
  const size_t n = series.size();
  const size_t k = std::max<size_t>(1, static_cast<size_t>(std::floor(fraction * n)));
  return std::accumulate(series.end() - static_cast<long>(k), series.end(), 0.0) /
         static_cast<double>(k);
}

double max_abs_deviation(const TimeSeries& a, const TimeSeries& b) {
  if (a.n_samples() != b.n_samples() || a.n_modes() != b.n_modes()) {
    throw std::invalid_argument("max_abs_deviation: series shape mismatch");
  }
  auto dev = [](const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
  };
  double m = 0.0;
  for (int j = 0; j < a.n_modes(); ++j) {
    m = std::max(m, dev(a.mean_yes[static_cast<size_t>(j)], b.mean_yes[static_cast<size_t>(j)]));
  }
  m = std::max(m, dev(a.entropy, b.entropy));
  m = std::max(m, dev(a.purity, b.purity));
  return m;
}

}  // namespace qparl
