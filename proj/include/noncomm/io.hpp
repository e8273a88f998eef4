#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "noncomm/experiments.hpp"

namespace noncomm::io {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

// CSV: traj_index,rx,ry,rz
std::string final_states_csv(const FinalStateSet& set);
FinalStateSet final_states_from_csv(const std::string& csv);

// CSV: traj_index,cluster  +  JSON sidecar {centroids, iterations, converged}
std::string cluster_csv(const ClusterResult& result);
nlohmann::json cluster_sidecar(const ClusterResult& result);

// CSV: kappa,theta,D,V,phi,N1,N2,flags (flagged cells carry no phi)
std::string grid_csv(const GridResult& grid);

// CSV: x,density
std::string density_curve_csv(const DensityCurve& curve);

// JSON arrays of [re, im] pairs, row-major.
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json bloch_to_json(const BlochVector& r);

// {P1, P2, D, V, phi, N1, N2, flags, converged}
nlohmann::json measure_result_json(const MeasureResult& result);

nlohmann::json bound_report_json(const BoundSelection& selection);

/// Full config file. Scalar kappa/theta drive `simulate`/`measure`;
/// kappa_values/theta_values drive `sweep`/`bound-select`.
struct RunConfig {
  SweepConfig sweep;                 // rho0, axes, T, dt, N, seed, params, lambda
  std::optional<double> kappa;       // single-run strength
  std::optional<double> theta;       // single-run angle
};

/// Parses and validates; throws ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

std::vector<BoundCurve> parse_curves(const nlohmann::json& j);
std::vector<BoundCurve> load_curves(const std::string& path);

MeasurementConfig single_run_config(const RunConfig& config);

}  // namespace noncomm::io
