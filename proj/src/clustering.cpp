#include "noncomm/clustering.hpp"

#include <algorithm>
#include <limits>

namespace noncomm {

namespace {

bool all_identical(std::span<const BlochVector> points) {
  return std::all_of(points.begin(), points.end(),
                     [&](const BlochVector& p) { return p == points[0]; });
}

}  // namespace

ClusterResult kmeans_from(std::span<const BlochVector> points,
                          const std::array<BlochVector, 2>& init,
                          double lambda, int max_iter) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("kmeans needs at least 2 points");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");

  ClusterResult result;
  result.assignments.assign(n, 0);
  result.centroids = init;

  for (int iter = 0; iter < max_iter; ++iter) {
    // Assignment pass; ties go to centroid 0.
    double objective = 0.0;
    std::array<BlochVector, 2> sums = {BlochVector::Zero(),
                                       BlochVector::Zero()};
    std::array<std::size_t, 2> counts = {0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      const double d0 = (points[j] - result.centroids[0]).squaredNorm();
      const double d1 = (points[j] - result.centroids[1]).squaredNorm();
      const int label = d1 < d0 ? 1 : 0;
      result.assignments[j] = label;
      objective += label ? d1 : d0;
      sums[label] += points[j];
      ++counts[label];
    }
    result.objective_history.push_back(objective);
    result.iterations = iter + 1;

    std::array<BlochVector, 2> updated = result.centroids;
    for (int i = 0; i < 2; ++i) {
      if (counts[i] > 0) {
        updated[i] = sums[i] / static_cast<double>(counts[i]);
      } else {
        // Re-seed an emptied cluster at the point farthest from the
        // surviving centroid.
        const BlochVector& other = result.centroids[1 - i];
        std::size_t farthest = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double d = (points[j] - other).squaredNorm();
          if (d > best) {
            best = d;
            farthest = j;
          }
        }
        updated[i] = points[farthest];
      }
    }

    const double shift = std::max((updated[0] - result.centroids[0]).norm(),
                                  (updated[1] - result.centroids[1]).norm());
    result.centroids = updated;
    if (shift < lambda) {
      result.converged = true;
      break;
    }
  }

  // Final assignment against the final centroids so the nearest-centroid
  // invariant holds on return.
  std::array<std::size_t, 2> counts = {0, 0};
  for (std::size_t j = 0; j < n; ++j) {
    const double d0 = (points[j] - result.centroids[0]).squaredNorm();
    const double d1 = (points[j] - result.centroids[1]).squaredNorm();
    result.assignments[j] = d1 < d0 ? 1 : 0;
    ++counts[result.assignments[j]];
  }
  for (int i = 0; i < 2; ++i) {
    if (counts[i] == 0) {
      // Move the point farthest from the occupied centroid over.
      std::size_t farthest = 0;
      double best = -1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double d = (points[j] - result.centroids[1 - i]).squaredNorm();
        if (d > best) {
          best = d;
          farthest = j;
        }
      }
      result.assignments[farthest] = i;
      result.centroids[i] = points[farthest];
    }
  }
  return result;
}

ClusterResult kmeans(std::span<const BlochVector> points, double lambda,
                     int max_iter, std::uint64_t init_seed) {
  if (points.size() < 2)
    throw std::invalid_argument("kmeans needs at least 2 points");
  if (all_identical(points))
    throw DegenerateInput("all input points are identical");

  RandomStream stream(mix_seed(init_seed, 0x6b6d65616e73ULL));
  const std::size_t n = points.size();
  std::size_t i0 = stream.uniform_index(n);
  std::size_t i1 = stream.uniform_index(n);
  while (points[i0] == points[i1]) i1 = stream.uniform_index(n);

  return kmeans_from(points, {points[i0], points[i1]}, lambda, max_iter);
}

std::vector<BlochVector> subset(std::span<const BlochVector> points,
                                const ClusterResult& result, int i) {
  if (i != 0 && i != 1)
    throw IndexOutOfRange("cluster index must be 0 or 1, got " +
                          std::to_string(i));
  std::vector<BlochVector> out;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (result.assignments[j] == i) out.push_back(points[j]);
  return out;
}

}  // namespace noncomm
