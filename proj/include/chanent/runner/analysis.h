#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chanent/circuit/ensemble.h"

namespace chanent::runner {

struct Peak {
  std::size_t t = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
};

// Largest mean of a series (first occurrence on ties).
Peak series_peak(const circuit::EnsembleResult& result, const circuit::Series& series);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares y = slope x + intercept. Needs two distinct x values.
LinearFit linear_regression(std::span<const double> x, std::span<const double> y);

// First time at which the mean reaches `threshold`, if it ever does.
std::optional<std::size_t> first_crossing(const circuit::EnsembleResult& result,
                                          const circuit::Series& series, double threshold);

}  // namespace chanent::runner
