#include "noncomm/sme.hpp"

#include <cmath>
#include <numbers>
#include <thread>

namespace noncomm {

void MeasurementConfig::validate() const {
  if (!(kappa1 >= 0.0)) throw std::invalid_argument("kappa1 must be >= 0");
  if (!(kappa2 >= 0.0)) throw std::invalid_argument("kappa2 must be >= 0");
  if (!(duration_T > 0.0))
    throw std::invalid_argument("duration_T must be > 0");
  if (!(dt > 0.0) || dt > duration_T)
    throw std::invalid_argument("dt must satisfy 0 < dt <= duration_T");
  if (!(theta >= 0.0) || theta > std::numbers::pi)
    throw std::invalid_argument("theta must lie in [0, pi]");
}

namespace {
void check_stability(double kappa, double dt) {
  if (kappa * dt > kMaxKappaDt)
    throw StabilityViolation("kappa*dt = " + std::to_string(kappa * dt) +
                             " exceeds the stability bound 0.1");
}
}  // namespace

BlochVector backaction(const BlochVector& r, const Eigen::Vector3d& axis,
                       double kappa, double dt, double dW) {
  const double c = axis.dot(r);
  return (4.0 * kappa * dt) * (c * axis - r) +
         (2.0 * std::sqrt(2.0 * kappa) * dW) * (axis - c * r);
}

BlochVector clamp_to_ball(const BlochVector& r) {
  const double norm = r.norm();
  return norm > 1.0 ? BlochVector(r / norm) : r;
}

BlochVector step_single(const BlochVector& r, const Observable& a,
                        double kappa, double dt, double dW) {
  check_stability(kappa, dt);
  return clamp_to_ball(r + backaction(r, a.axis, kappa, dt, dW));
}

BlochVector step_dual_raw(const BlochVector& r, const Observable& obs1,
                          const Observable& obs2, double kappa1, double kappa2,
                          double dt, double dW1, double dW2) {
  return r + backaction(r, obs1.axis, kappa1, dt, dW1) +
         backaction(r, obs2.axis, kappa2, dt, dW2);
}

BlochVector step_dual(const BlochVector& r, const MeasurementConfig& config,
                      double dW1, double dW2) {
  check_stability(config.kappa1, config.dt);
  check_stability(config.kappa2, config.dt);
  return clamp_to_ball(step_dual_raw(r, observable_from_angle(0.0),
                                     observable_from_angle(config.theta),
                                     config.kappa1, config.kappa2, config.dt,
                                     dW1, dW2));
}

BlochVector simulate_trajectory(const DensityMatrix& rho0,
                                const MeasurementConfig& config,
                                RandomStream& stream) {
  config.validate();
  check_stability(config.kappa1, config.dt);
  check_stability(config.kappa2, config.dt);

  const Observable obs1 = observable_from_angle(0.0);
  const Observable obs2 = observable_from_angle(config.theta);
  const auto n_steps =
      static_cast<std::size_t>(std::ceil(config.duration_T / config.dt - 1e-9));
  BlochVector r = bloch_from_density(rho0);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double h = (i + 1 < n_steps)
                         ? config.dt
                         : config.duration_T - static_cast<double>(i) * config.dt;
    const double sqrt_h = std::sqrt(h);
    const double dw1 = sqrt_h * stream.normal();
    const double dw2 = sqrt_h * stream.normal();
    r = clamp_to_ball(step_dual_raw(r, obs1, obs2, config.kappa1,
                                    config.kappa2, h, dw1, dw2));
  }
  return r;
}

FinalStateSet simulate_ensemble(const DensityMatrix& rho0,
                                const MeasurementConfig& config,
                                std::size_t n_traj, unsigned threads) {
  if (n_traj < 2) throw std::invalid_argument("ensemble size N must be >= 2");
  config.validate();

  FinalStateSet out;
  out.config = config;
  out.states.resize(n_traj);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      RandomStream stream(mix_seed(config.seed, k));
      out.states[k] = simulate_trajectory(rho0, config, stream);
    }
  };

  if (threads <= 1) {
    run_range(0, n_traj);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_traj + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min<std::size_t>(t * chunk, n_traj);
      const std::size_t end = std::min<std::size_t>(begin + chunk, n_traj);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace noncomm
