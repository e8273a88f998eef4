#include "noncomm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

namespace noncomm {

void SweepConfig::validate() const {
  if (kappa_values.empty())
    throw std::invalid_argument("kappa_values must be non-empty");
  if (theta_values.empty())
    throw std::invalid_argument("theta_values must be non-empty");
  if (!std::is_sorted(kappa_values.begin(), kappa_values.end()))
    throw std::invalid_argument("kappa_values must be ascending");
  if (!std::is_sorted(theta_values.begin(), theta_values.end()))
    throw std::invalid_argument("theta_values must be ascending");
  for (double k : kappa_values)
    if (!(k >= 0.0)) throw std::invalid_argument("kappa_values must be >= 0");
  for (double t : theta_values)
    if (!(t >= 0.0) || t > std::numbers::pi)
      throw std::invalid_argument("theta_values must lie in [0, pi]");
  if (!(duration_T > 0.0))
    throw std::invalid_argument("duration_T must be > 0");
  if (!(dt > 0.0) || dt > duration_T)
    throw std::invalid_argument("dt must satisfy 0 < dt <= duration_T");
  if (ensemble_size < 2)
    throw std::invalid_argument("ensemble_size N must be >= 2");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  params.validate();
  if (!is_valid_density(rho0))
    throw std::invalid_argument("rho0 is not a valid density matrix");
}

void BoundCurve::validate() const {
  if (knots.empty())
    throw std::invalid_argument("curve '" + name + "' has no knots");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i].first > knots[i - 1].first))
      throw std::invalid_argument("curve '" + name +
                                  "': knot kappa values must be ascending");
  for (const auto& [k, t] : knots)
    if (!(t >= 0.0) || t > std::numbers::pi)
      throw std::invalid_argument("curve '" + name +
                                  "': knot theta values must lie in [0, pi]");
}

double BoundCurve::eval(double kappa) const {
  if (knots.size() == 1) return knots.front().second;
  std::size_t hi = 1;
  while (hi + 1 < knots.size() && kappa > knots[hi].first) ++hi;
  const auto& [k0, t0] = knots[hi - 1];
  const auto& [k1, t1] = knots[hi];
  return t0 + (t1 - t0) * (kappa - k0) / (k1 - k0);
}

GridResult sweep_grid(const SweepConfig& config, unsigned threads,
                      const CellObserver& observer) {
  config.validate();
  GridResult grid;
  grid.n_kappa = config.kappa_values.size();
  grid.n_theta = config.theta_values.size();
  grid.cells.resize(grid.n_kappa * grid.n_theta);

  std::mutex observer_mutex;
  auto run_one = [&](std::size_t ki, std::size_t ti) {
    GridCell cell;
    cell.kappa_index = ki;
    cell.theta_index = ti;
    cell.kappa = config.kappa_values[ki];
    cell.theta = config.theta_values[ti];

    MeasurementConfig mc;
    mc.kappa1 = mc.kappa2 = cell.kappa;
    mc.theta = cell.theta;
    mc.duration_T = config.duration_T;
    mc.dt = config.dt;
    mc.seed = mix_seed(config.seed, ki, ti);

    try {
      const FinalStateSet ensemble =
          simulate_ensemble(config.rho0, mc, config.ensemble_size);
      const MeasureResult result = measure_pipeline(
          config.rho0, ensemble, config.lambda, config.params,
          mix_seed(mc.seed, 0x636c7573ULL));
      cell.d = result.d;
      cell.v = result.v;
      cell.phi = result.phi;
      cell.n1 = result.cluster_sizes[0];
      cell.n2 = result.cluster_sizes[1];
      if (result.flag != PhiFlag::kNone)
        cell.flags.push_back(to_string(result.flag));
      if (observer) {
        std::scoped_lock lock(observer_mutex);
        observer(cell, ensemble);
      }
    } catch (const DegenerateInput&) {
      cell.flags.emplace_back("DEGENERATE_INPUT");
    }
    grid.cells[ki * grid.n_theta + ti] = std::move(cell);
  };

  std::vector<std::pair<std::size_t, std::size_t>> indices;
  indices.reserve(grid.cells.size());
  for (std::size_t ki = 0; ki < grid.n_kappa; ++ki)
    for (std::size_t ti = 0; ti < grid.n_theta; ++ti)
      indices.emplace_back(ki, ti);

  if (threads <= 1) {
    for (const auto& [ki, ti] : indices) run_one(ki, ti);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (indices.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(t * chunk, indices.size());
      const std::size_t end = std::min(begin + chunk, indices.size());
      if (begin < end)
        pool.emplace_back([&, begin, end] {
          for (std::size_t i = begin; i < end; ++i)
            run_one(indices[i].first, indices[i].second);
        });
    }
    for (auto& th : pool) th.join();
  }
  return grid;
}

std::pair<std::vector<double>, std::vector<double>> partition_by_curve(
    const GridResult& grid, const BoundCurve& curve) {
  curve.validate();
  std::vector<double> below;
  std::vector<double> above;
  for (const GridCell& cell : grid.cells) {
    if (!cell.phi.has_value()) continue;
    const double bound = curve.eval(cell.kappa);
    if (cell.theta < bound + 1e-12)
      below.push_back(*cell.phi);
    else
      above.push_back(*cell.phi);
  }
  if (below.size() < 2 || above.size() < 2)
    throw EmptyPartition("curve '" + curve.name + "' leaves fewer than 2 " +
                         (below.size() < 2 ? "cells below" : "cells above"));
  return {std::move(below), std::move(above)};
}

BoundSelection select_bound_curve(const GridResult& grid,
                                  const std::vector<BoundCurve>& curves) {
  if (curves.size() < 2)
    throw std::invalid_argument("need at least 2 candidate curves");

  BoundSelection selection;
  double best = std::numeric_limits<double>::infinity();
  for (const BoundCurve& curve : curves) {
    const auto [below, above] = partition_by_curve(grid, curve);
    BoundSelection::Entry entry;
    entry.name = curve.name;
    entry.below_density = ksdensity(below);
    entry.above_density = ksdensity(above);
    entry.overlap = overlap_proportion(entry.below_density,
                                       entry.above_density);
    if (entry.overlap < best) {
      best = entry.overlap;
      selection.winner = curve.name;
    }
    selection.entries.push_back(std::move(entry));
  }
  return selection;
}

}  // namespace noncomm
