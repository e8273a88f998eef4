#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "noncomm/clustering.hpp"

namespace noncomm {

struct EmptySubset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Auxiliary parameters of the non-commutability measure.
struct MeasureParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.01;

  void validate() const;
};

enum class PhiFlag {
  kNone,
  kNearZeroD,  // D below epsilon: the "no measurement" regime
  kPole,       // denominator 4 - D + gamma at or past its zero crossing
};

std::string to_string(PhiFlag flag);

struct PhiValue {
  std::optional<double> value;
  PhiFlag flag = PhiFlag::kNone;
};

struct MeasureResult {
  std::array<BlochVector, 2> medoids;  // P1, P2
  double d = 0.0;
  double v = 0.0;
  std::optional<double> phi;
  PhiFlag flag = PhiFlag::kNone;
  std::array<std::size_t, 2> cluster_sizes = {0, 0};
  bool converged = false;
  int iterations = 0;
};

/// The member of the subset minimizing the summed squared Euclidean
/// distance to all members; ties go to the lowest index.
BlochVector medoid(std::span<const BlochVector> points);

/// D = |B(rho0) - P1|^2 + |B(rho0) - P2|^2.
double compute_d(const DensityMatrix& rho0, const BlochVector& p1,
                 const BlochVector& p2);

/// V = (1/N) sum_i sum_j |B_ij - mean_i|^2 over both subsets.
double compute_v(std::span<const BlochVector> subset1,
                 std::span<const BlochVector> subset2);

/// Phi = alpha * V / (D * (4 - D + gamma)) - beta, or a flagged
/// non-numeric result in the degenerate denominator regimes.
PhiValue compute_phi(double d, double v, const MeasureParams& params);

/// Cluster R_f (K-means, K = 2), extract medoids, and score the
/// measurement: D, V, Phi plus cluster diagnostics.
MeasureResult measure_pipeline(const DensityMatrix& rho0,
                               const FinalStateSet& final_states,
                               double lambda, const MeasureParams& params,
                               std::uint64_t init_seed);

}  // namespace noncomm
