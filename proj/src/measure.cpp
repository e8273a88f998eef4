#include "noncomm/measure.hpp"

#include <limits>

namespace noncomm {

namespace {
constexpr double kDenominatorEps = 1e-9;
}

void MeasureParams::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
}

std::string to_string(PhiFlag flag) {
  switch (flag) {
    case PhiFlag::kNearZeroD: return "NEAR_ZERO_D";
    case PhiFlag::kPole: return "POLE";
    default: return "";
  }
}

BlochVector medoid(std::span<const BlochVector> points) {
  if (points.empty()) throw EmptySubset("medoid of an empty subset");
  const std::size_t n = points.size();
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double cost = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      cost += (points[k] - points[j]).squaredNorm();
    if (cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  return points[best];
}

double compute_d(const DensityMatrix& rho0, const BlochVector& p1,
                 const BlochVector& p2) {
  const BlochVector b0 = bloch_from_density(rho0);
  return (b0 - p1).squaredNorm() + (b0 - p2).squaredNorm();
}

double compute_v(std::span<const BlochVector> subset1,
                 std::span<const BlochVector> subset2) {
  if (subset1.empty() || subset2.empty())
    throw EmptySubset("compute_v requires two non-empty subsets");
  const double n = static_cast<double>(subset1.size() + subset2.size());
  double total = 0.0;
  for (const auto& sub : {subset1, subset2}) {
    BlochVector mean = BlochVector::Zero();
    for (const auto& p : sub) mean += p;
    mean /= static_cast<double>(sub.size());
    for (const auto& p : sub) total += (p - mean).squaredNorm();
  }
  return total / n;
}

PhiValue compute_phi(double d, double v, const MeasureParams& params) {
  params.validate();
  if (d < kDenominatorEps) return {std::nullopt, PhiFlag::kNearZeroD};
  const double tail = 4.0 - d + params.gamma;
  if (tail < kDenominatorEps) return {std::nullopt, PhiFlag::kPole};
  return {params.alpha * v / (d * tail) - params.beta, PhiFlag::kNone};
}

MeasureResult measure_pipeline(const DensityMatrix& rho0,
                               const FinalStateSet& final_states,
                               double lambda, const MeasureParams& params,
                               std::uint64_t init_seed) {
  params.validate();
  const auto& points = final_states.states;
  const ClusterResult clusters = kmeans(points, lambda, 100, init_seed);
  const std::vector<BlochVector> sub0 = subset(points, clusters, 0);
  const std::vector<BlochVector> sub1 = subset(points, clusters, 1);

  MeasureResult result;
  result.medoids = {medoid(sub0), medoid(sub1)};
  result.cluster_sizes = {sub0.size(), sub1.size()};
  result.converged = clusters.converged;
  result.iterations = clusters.iterations;
  result.d = compute_d(rho0, result.medoids[0], result.medoids[1]);
  result.v = compute_v(sub0, sub1);
  const PhiValue phi = compute_phi(result.d, result.v, params);
  result.phi = phi.value;
  result.flag = phi.flag;
  return result;
}

}  // namespace noncomm
