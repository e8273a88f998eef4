#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "noncomm/sme.hpp"

namespace noncomm {

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Two-way partition of a final-state ensemble.
struct ClusterResult {
  std::vector<int> assignments;            // 0 or 1 per point
  std::array<BlochVector, 2> centroids;    // cluster means
  int iterations = 0;
  bool converged = false;
  // Within-cluster sum of squared distances after each assignment pass.
  std::vector<double> objective_history;
};

/// Lloyd iteration with K = 2. Initial centroids are two distinct data
/// points drawn uniformly from `points` (seeded); iteration stops when
/// both centroids move less than `lambda`, or after max_iter passes with
/// converged = false. Ties in the assignment go to the lower index.
ClusterResult kmeans(std::span<const BlochVector> points, double lambda,
                     int max_iter, std::uint64_t init_seed);

inline ClusterResult kmeans(const FinalStateSet& points, double lambda,
                            int max_iter, std::uint64_t init_seed) {
  return kmeans(std::span<const BlochVector>(points.states), lambda, max_iter,
                init_seed);
}

/// Lloyd iteration from explicit initial centroids.
ClusterResult kmeans_from(std::span<const BlochVector> points,
                          const std::array<BlochVector, 2>& init,
                          double lambda, int max_iter);

/// The ordered sublist assigned to cluster i (i in {0, 1}).
std::vector<BlochVector> subset(std::span<const BlochVector> points,
                                const ClusterResult& result, int i);

inline std::vector<BlochVector> subset(const FinalStateSet& points,
                                       const ClusterResult& result, int i) {
  return subset(std::span<const BlochVector>(points.states), result, i);
}

}  // namespace noncomm
