#pragma once

#include <filesystem>
#include <string>

#include "qparl/timeseries.hpp"

namespace qparl {

// Locale-independent rendering with the given number of significant digits.
std::string format_double(double v, int significant_digits = 12);

// Header `t,mean_yes_1..N,entropy,purity`, one row per sample, 12 significant
// digits.
void write_csv(const std::filesystem::path& file, const TimeSeries& series);
TimeSeries read_csv(const std::filesystem::path& file);

}  // namespace qparl
