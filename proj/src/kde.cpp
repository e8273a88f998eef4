#include "noncomm/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace noncomm {

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

// Linear interpolation on an ascending grid, 0 outside its range.
double interpolate(const DensityCurve& curve, double x) {
  const auto& g = curve.grid;
  if (x < g.front() || x > g.back()) return 0.0;
  const auto it = std::lower_bound(g.begin(), g.end(), x);
  if (it == g.begin()) return curve.density.front();
  const std::size_t hi = static_cast<std::size_t>(it - g.begin());
  const std::size_t lo = hi - 1;
  const double frac = (x - g[lo]) / (g[hi] - g[lo]);
  return curve.density[lo] * (1.0 - frac) + curve.density[hi] * frac;
}

}  // namespace

double trapezoid(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

double silverman_bandwidth(std::span<const double> samples) {
  const auto n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= (n - 1.0);
  const double sd = std::sqrt(var);
  if (!(sd > 0.0))
    throw InsufficientSpread("all samples are equal; no density to estimate");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr =
      interpolated_quantile(sorted, 0.75) - interpolated_quantile(sorted, 0.25);
  const double scale = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  return 0.9 * scale * std::pow(n, -0.2);
}

DensityCurve ksdensity(std::span<const double> samples, int grid_size) {
  if (samples.size() < 2)
    throw std::invalid_argument("ksdensity needs at least 2 samples");
  if (grid_size < 2)
    throw std::invalid_argument("ksdensity grid_size must be >= 2");

  const double h = silverman_bandwidth(samples);
  const auto [min_it, max_it] = std::minmax_element(samples.begin(),
                                                    samples.end());
  const double lo = *min_it - 3.0 * h;
  const double hi = *max_it + 3.0 * h;
  const double step = (hi - lo) / static_cast<double>(grid_size - 1);

  DensityCurve curve;
  curve.grid.resize(grid_size);
  curve.density.resize(grid_size);
  const double norm =
      1.0 / (static_cast<double>(samples.size()) * h *
             std::sqrt(2.0 * std::numbers::pi));
  for (int i = 0; i < grid_size; ++i) {
    const double x = lo + step * static_cast<double>(i);
    double sum = 0.0;
    for (double s : samples) {
      const double u = (x - s) / h;
      sum += std::exp(-0.5 * u * u);
    }
    curve.grid[i] = x;
    curve.density[i] = norm * sum;
  }
  return curve;
}

double overlap_proportion(const DensityCurve& c1, const DensityCurve& c2) {
  std::vector<double> grid;
  grid.reserve(c1.grid.size() + c2.grid.size());
  std::merge(c1.grid.begin(), c1.grid.end(), c2.grid.begin(), c2.grid.end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> lower(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    lower[i] = std::min(interpolate(c1, grid[i]), interpolate(c2, grid[i]));
  return std::clamp(trapezoid(grid, lower), 0.0, 1.0);
}

}  // namespace noncomm
