#include "chanent/runner/analysis.h"

#include <stdexcept>

namespace chanent::runner {

Peak series_peak(const circuit::EnsembleResult& result, const circuit::Series& series) {
  if (series.mean.empty()) throw std::invalid_argument("empty series");
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.mean.size(); ++i) {
    if (series.mean[i] > series.mean[best]) best = i;
  }
  return {result.times.at(best), series.mean[best], series.stderr_[best]};
}

LinearFit linear_regression(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("regression needs two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("regression needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

std::optional<std::size_t> first_crossing(const circuit::EnsembleResult& result,
                                          const circuit::Series& series, double threshold) {
  for (std::size_t i = 0; i < series.mean.size(); ++i) {
    if (series.mean[i] >= threshold) return result.times.at(i);
  }
  return std::nullopt;
}

}  // namespace chanent::runner
