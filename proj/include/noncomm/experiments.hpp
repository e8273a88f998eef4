#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncomm/kde.hpp"
#include "noncomm/measure.hpp"

namespace noncomm {

struct EmptyPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One (kappa, theta) grid sweep with two identical detectors
/// (kappa1 = kappa2 = kappa at every cell).
struct SweepConfig {
  std::vector<double> kappa_values;  // ascending, 1/us
  std::vector<double> theta_values;  // ascending, radians
  DensityMatrix rho0;
  double duration_T = 200.0;  // us
  double dt = 0.01;           // us
  std::uint64_t seed = 0;
  std::size_t ensemble_size = 1000;
  MeasureParams params;
  double lambda = 0.01;

  void validate() const;
};

struct GridCell {
  std::size_t kappa_index = 0;
  std::size_t theta_index = 0;
  double kappa = 0.0;
  double theta = 0.0;
  std::optional<double> d;
  std::optional<double> v;
  std::optional<double> phi;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<std::string> flags;
};

struct GridResult {
  std::size_t n_kappa = 0;
  std::size_t n_theta = 0;
  std::vector<GridCell> cells;  // sorted by kappa index, then theta index

  const GridCell& at(std::size_t kappa_index, std::size_t theta_index) const {
    return cells.at(kappa_index * n_theta + theta_index);
  }
};

/// Piecewise-linear reference curve theta = L(kappa), extrapolated
/// linearly from the end segments outside the knot range.
struct BoundCurve {
  std::string name;
  std::vector<std::pair<double, double>> knots;  // (kappa, theta), kappa ascending

  double eval(double kappa) const;
  void validate() const;
};

/// Simulate + score every (kappa, theta) cell. Per-cell errors become
/// flags; the sweep never aborts. The optional observer receives each
/// cell's final states (for --dump-states).
using CellObserver =
    std::function<void(const GridCell&, const FinalStateSet&)>;
GridResult sweep_grid(const SweepConfig& config, unsigned threads = 1,
                      const CellObserver& observer = nullptr);

/// Phi values of unflagged cells strictly below (S1) and above (S2) the
/// curve; cells within 1e-12 of the curve go to S1. Throws EmptyPartition
/// if either side has fewer than 2 values.
std::pair<std::vector<double>, std::vector<double>> partition_by_curve(
    const GridResult& grid, const BoundCurve& curve);

struct BoundSelection {
  struct Entry {
    std::string name;
    double overlap = 0.0;
    DensityCurve below_density;
    DensityCurve above_density;
  };
  std::string winner;
  std::vector<Entry> entries;
};

/// Score each candidate curve by the KDE overlap of its below/above Phi
/// populations; the winner is the curve with the smallest overlap
/// (ties -> first listed).
BoundSelection select_bound_curve(const GridResult& grid,
                                  const std::vector<BoundCurve>& curves);

}  // namespace noncomm
