#include "noncomm/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace noncomm::io {

using nlohmann::json;

std::string format_double(double value) { return fmt::format("{}", value); }

std::string final_states_csv(const FinalStateSet& set) {
  std::string out = "traj_index,rx,ry,rz\n";
  for (std::size_t i = 0; i < set.states.size(); ++i) {
    const BlochVector& r = set.states[i];
    out += fmt::format("{},{},{},{}\n", i, r.x(), r.y(), r.z());
  }
  return out;
}

FinalStateSet final_states_from_csv(const std::string& csv) {
  FinalStateSet set;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BlochVector r;
    std::size_t index = 0;
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    index = std::stoull(field);
    for (int i = 0; i < 3; ++i) {
      std::getline(row, field, ',');
      r[i] = std::stod(field);
    }
    (void)index;
    set.states.push_back(r);
  }
  return set;
}

std::string cluster_csv(const ClusterResult& result) {
  std::string out = "traj_index,cluster\n";
  for (std::size_t i = 0; i < result.assignments.size(); ++i)
    out += fmt::format("{},{}\n", i, result.assignments[i]);
  return out;
}

json cluster_sidecar(const ClusterResult& result) {
  return json{{"centroids",
               {bloch_to_json(result.centroids[0]),
                bloch_to_json(result.centroids[1])}},
              {"iterations", result.iterations},
              {"converged", result.converged}};
}

std::string grid_csv(const GridResult& grid) {
  std::string out = "kappa,theta,D,V,phi,N1,N2,flags\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? fmt::format("{}", *v) : std::string();
  };
  for (const GridCell& cell : grid.cells) {
    std::string flags;
    for (std::size_t i = 0; i < cell.flags.size(); ++i) {
      if (i) flags += ';';
      flags += cell.flags[i];
    }
    out += fmt::format("{},{},{},{},{},{},{},{}\n", cell.kappa, cell.theta,
                       opt(cell.d), opt(cell.v), opt(cell.phi), cell.n1,
                       cell.n2, flags);
  }
  return out;
}

std::string density_curve_csv(const DensityCurve& curve) {
  std::string out = "x,density\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    out += fmt::format("{},{}\n", curve.grid[i], curve.density[i]);
  return out;
}

json density_to_json(const DensityMatrix& rho) {
  json entries = json::array();
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 2; ++col)
      entries.push_back({rho(row, col).real(), rho(row, col).imag()});
  return entries;
}

DensityMatrix density_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ConfigError("rho0 must be an array of 4 [re, im] pairs, row-major");
  DensityMatrix rho;
  for (int i = 0; i < 4; ++i) {
    const json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2)
      throw ConfigError("rho0 entries must be [re, im] pairs");
    rho(i / 2, i % 2) = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return rho;
}

json bloch_to_json(const BlochVector& r) {
  return json{r.x(), r.y(), r.z()};
}

json measure_result_json(const MeasureResult& result) {
  json j{{"P1", bloch_to_json(result.medoids[0])},
         {"P2", bloch_to_json(result.medoids[1])},
         {"D", result.d},
         {"V", result.v},
         {"N1", result.cluster_sizes[0]},
         {"N2", result.cluster_sizes[1]},
         {"converged", result.converged},
         {"flags", json::array()}};
  if (result.phi)
    j["phi"] = *result.phi;
  else
    j["phi"] = nullptr;
  if (result.flag != PhiFlag::kNone) j["flags"].push_back(to_string(result.flag));
  return j;
}

namespace {
json curve_json(const DensityCurve& curve) {
  return json{{"x", curve.grid}, {"density", curve.density}};
}
}  // namespace

json bound_report_json(const BoundSelection& selection) {
  json curves = json::array();
  for (const auto& entry : selection.entries) {
    curves.push_back({{"name", entry.name},
                      {"overlap", entry.overlap},
                      {"below_density", curve_json(entry.below_density)},
                      {"above_density", curve_json(entry.above_density)}});
  }
  return json{{"winner", selection.winner}, {"curves", curves}};
}

namespace {

template <typename T>
T require(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing config field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + key + "' has the wrong type");
  }
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + key + "' has the wrong type");
  }
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig config;
  config.sweep.rho0 = density_from_json(
      j.contains("rho0") ? j.at("rho0")
                         : throw ConfigError("missing config field 'rho0'"));
  if (!is_valid_density(config.sweep.rho0))
    throw ConfigError("config field 'rho0' is not a valid density matrix");

  config.sweep.duration_T = require<double>(j, "T");
  config.sweep.dt = require<double>(j, "dt");
  config.sweep.ensemble_size = require<std::uint64_t>(j, "N");
  config.sweep.seed = require<std::uint64_t>(j, "seed");
  config.sweep.params.alpha = get_or<double>(j, "alpha", 1.0);
  config.sweep.params.beta = get_or<double>(j, "beta", 0.0);
  config.sweep.params.gamma = get_or<double>(j, "gamma", 0.01);
  config.sweep.lambda = get_or<double>(j, "lambda", 0.01);
  config.sweep.kappa_values =
      get_or<std::vector<double>>(j, "kappa_values", {});
  config.sweep.theta_values =
      get_or<std::vector<double>>(j, "theta_values", {});
  if (j.contains("kappa")) config.kappa = require<double>(j, "kappa");
  if (j.contains("theta")) config.theta = require<double>(j, "theta");

  if (!(config.sweep.duration_T > 0.0))
    throw ConfigError("config field 'T' must be > 0");
  if (!(config.sweep.dt > 0.0) || config.sweep.dt > config.sweep.duration_T)
    throw ConfigError("config field 'dt' must satisfy 0 < dt <= T");
  if (config.sweep.ensemble_size < 2)
    throw ConfigError("config field 'N' must be >= 2");
  if (!(config.sweep.lambda > 0.0))
    throw ConfigError("config field 'lambda' must be > 0");
  try {
    config.sweep.params.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("config field error: ") + err.what());
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& err) {
    throw ConfigError(std::string("config file is not valid JSON: ") +
                      err.what());
  }
  return parse_config(j);
}

std::vector<BoundCurve> parse_curves(const json& j) {
  if (!j.contains("curves") || !j.at("curves").is_array())
    throw ConfigError("curves file must contain a 'curves' array");
  std::vector<BoundCurve> curves;
  for (const json& c : j.at("curves")) {
    BoundCurve curve;
    curve.name = require<std::string>(c, "name");
    const json& knots = c.contains("knots")
                            ? c.at("knots")
                            : throw ConfigError("curve '" + curve.name +
                                                "' is missing 'knots'");
    for (const json& knot : knots) {
      if (!knot.is_array() || knot.size() != 2)
        throw ConfigError("curve '" + curve.name +
                          "': knots must be [kappa, theta] pairs");
      curve.knots.emplace_back(knot[0].get<double>(), knot[1].get<double>());
    }
    try {
      curve.validate();
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what());
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<BoundCurve> load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open curves file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& err) {
    throw ConfigError(std::string("curves file is not valid JSON: ") +
                      err.what());
  }
  return parse_curves(j);
}

MeasurementConfig single_run_config(const RunConfig& config) {
  if (!config.kappa)
    throw ConfigError("missing config field 'kappa' (required by this subcommand)");
  if (!config.theta)
    throw ConfigError("missing config field 'theta' (required by this subcommand)");
  MeasurementConfig mc;
  mc.kappa1 = mc.kappa2 = *config.kappa;
  mc.theta = *config.theta;
  mc.duration_T = config.sweep.duration_T;
  mc.dt = config.sweep.dt;
  mc.seed = config.sweep.seed;
  try {
    mc.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("config field error: ") + err.what());
  }
  return mc;
}

}  // namespace noncomm::io
