#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace noncomm {

struct InsufficientSpread : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One estimated probability density sampled on a uniform grid.
struct DensityCurve {
  std::vector<double> grid;     // ascending, uniform spacing
  std::vector<double> density;  // >= 0, trapezoid integral ~ 1
};

/// Silverman normal-reference bandwidth 0.9*min(std, IQR/1.34)*n^(-1/5).
/// Falls back to the standard deviation when the IQR degenerates to 0.
double silverman_bandwidth(std::span<const double> samples);

/// Gaussian-kernel density estimate on a uniform grid of `grid_size`
/// points spanning [min - 3h, max + 3h].
DensityCurve ksdensity(std::span<const double> samples, int grid_size = 100);

/// Overlapping coefficient: both curves are resampled onto the union
/// grid by linear interpolation (0 outside support) and the integral of
/// min(f1, f2) is taken by trapezoid. Clamped to [0, 1]; symmetric.
double overlap_proportion(const DensityCurve& c1, const DensityCurve& c2);

double trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace noncomm
