#pragma once

#include <cstdint>
#include <vector>

#include "noncomm/qubit.hpp"
#include "noncomm/rng.hpp"

namespace noncomm {

struct StabilityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Euler-Maruyama stability guard: kappa * dt must stay below this.
inline constexpr double kMaxKappaDt = 0.1;

/// One simultaneous measurement of sigma_z (detector 1, strength kappa1)
/// and sin(theta) sigma_x + cos(theta) sigma_z (detector 2, kappa2).
struct MeasurementConfig {
  double kappa1 = 0.0;    // 1/us
  double kappa2 = 0.0;    // 1/us
  double theta = 0.0;     // radians, [0, pi]
  double duration_T = 0;  // us
  double dt = 0.01;       // us
  std::uint64_t seed = 0;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Ensemble R_f of post-measurement Bloch vectors, one per prepared copy.
struct FinalStateSet {
  std::vector<BlochVector> states;
  MeasurementConfig config;
};

/// Backaction of one detector on the Bloch vector over one step:
/// 4*kappa*((a.r)a - r)*dt + 2*sqrt(2*kappa)*(a - (a.r)r)*dW.
/// This is the Bloch form of the dephasing drift -kappa[A,[A,rho]]dt plus
/// the innovation term sqrt(2*kappa)(A rho + rho A - 2 Tr(A rho) rho)dW.
BlochVector backaction(const BlochVector& r, const Eigen::Vector3d& axis,
                       double kappa, double dt, double dW);

/// Radial clamp onto the unit sphere whenever the integrator overshoots.
BlochVector clamp_to_ball(const BlochVector& r);

/// One Euler-Maruyama step under a single observable, clamped.
BlochVector step_single(const BlochVector& r, const Observable& a,
                        double kappa, double dt, double dW);

/// One step of the two-detector equation, clamped. Uses config.dt.
BlochVector step_dual(const BlochVector& r, const MeasurementConfig& config,
                      double dW1, double dW2);

/// Same step before clamping; exposed for norm diagnostics.
BlochVector step_dual_raw(const BlochVector& r, const Observable& obs1,
                          const Observable& obs2, double kappa1, double kappa2,
                          double dt, double dW1, double dW2);

/// Integrate to time T. ceil(T/dt) steps, the last one shortened to land
/// exactly on T. Detector 1's increment is drawn first each step.
BlochVector simulate_trajectory(const DensityMatrix& rho0,
                                const MeasurementConfig& config,
                                RandomStream& stream);

/// N independent trajectories. Trajectory k uses the sub-stream
/// mix_seed(config.seed, k), so the result is identical for any thread
/// count or scheduling.
FinalStateSet simulate_ensemble(const DensityMatrix& rho0,
                                const MeasurementConfig& config,
                                std::size_t n_traj, unsigned threads = 1);

}  // namespace noncomm
