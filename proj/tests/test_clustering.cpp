#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "noncomm/clustering.hpp"

using namespace noncomm;

namespace {

std::vector<BlochVector> two_pole_blob() {
  std::vector<BlochVector> points;
  points.insert(points.end(), 50, BlochVector(0, 0, 1));
  points.insert(points.end(), 50, BlochVector(0, 0, -1));
  return points;
}

// Two Gaussian blobs with generating labels.
std::pair<std::vector<BlochVector>, std::vector<int>> gaussian_blobs(
    std::uint64_t seed, double sigma = 0.05, int per_blob = 500) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<BlochVector> points;
  std::vector<int> labels;
  for (int blob = 0; blob < 2; ++blob) {
    const BlochVector center(blob == 0 ? 0.5 : -0.5, 0.0, 0.0);
    for (int i = 0; i < per_blob; ++i) {
      points.emplace_back(center.x() + noise(gen), noise(gen), noise(gen));
      labels.push_back(blob);
    }
  }
  return {points, labels};
}

int label_agreement(const std::vector<int>& got,
                    const std::vector<int>& truth) {
  int same = 0, swapped = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    same += got[i] == truth[i];
    swapped += got[i] != truth[i];
  }
  return std::max(same, swapped);
}

}  // namespace

TEST_CASE("two coincident-point blobs separate exactly") {
  const auto points = two_pole_blob();
  const ClusterResult result = kmeans(points, 0.01, 100, 3);
  CHECK(result.converged);
  for (int i = 0; i < 100; ++i)
    CHECK(result.assignments[i] == result.assignments[i < 50 ? 0 : 50]);
  CHECK(result.assignments[0] != result.assignments[50]);
  std::array<double, 2> z = {result.centroids[0].z(), result.centroids[1].z()};
  std::sort(z.begin(), z.end());
  CHECK(z[0] == doctest::Approx(-1.0));
  CHECK(z[1] == doctest::Approx(1.0));
}

TEST_CASE("identical points are degenerate input") {
  std::vector<BlochVector> points(100, BlochVector(0, 0, 1));
  CHECK_THROWS_AS(kmeans(points, 0.01, 100, 1), DegenerateInput);
}

TEST_CASE("well-separated gaussian blobs are recovered") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 17ULL, 99ULL}) {
    const auto [points, labels] = gaussian_blobs(seed);
    const ClusterResult result = kmeans(points, 0.01, 100, seed * 7 + 1);
    CHECK(label_agreement(result.assignments, labels) >= 990);
  }
}

TEST_CASE("objective is non-increasing across iterations") {
  const auto [points, labels] = gaussian_blobs(4, 0.3);
  const ClusterResult result = kmeans(points, 1e-9, 100, 11);
  REQUIRE(!result.objective_history.empty());
  for (std::size_t i = 1; i < result.objective_history.size(); ++i)
    CHECK(result.objective_history[i] <= result.objective_history[i - 1] + 1e-9);
}

TEST_CASE("assignments are a partition and points go to nearest centroid") {
  const auto [points, labels] = gaussian_blobs(8, 0.2);
  const ClusterResult result = kmeans(points, 0.01, 100, 5);
  const auto sub0 = subset(points, result, 0);
  const auto sub1 = subset(points, result, 1);
  CHECK(sub0.size() + sub1.size() == points.size());
  CHECK(!sub0.empty());
  CHECK(!sub1.empty());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double d0 = (points[j] - result.centroids[0]).squaredNorm();
    const double d1 = (points[j] - result.centroids[1]).squaredNorm();
    const int nearest = d1 < d0 ? 1 : 0;  // ties -> lower index
    CHECK(result.assignments[j] == nearest);
  }
}

TEST_CASE("permutation equivariance given the same initial centroids") {
  const auto [points, labels] = gaussian_blobs(21, 0.1);
  const std::array<BlochVector, 2> init = {BlochVector(0.2, 0, 0),
                                           BlochVector(-0.2, 0, 0)};
  const ClusterResult base = kmeans_from(points, init, 0.01, 100);

  std::vector<std::size_t> perm(points.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(77));
  std::vector<BlochVector> shuffled(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    shuffled[i] = points[perm[i]];

  const ClusterResult permuted = kmeans_from(shuffled, init, 0.01, 100);
  for (std::size_t i = 0; i < perm.size(); ++i)
    CHECK(permuted.assignments[i] == base.assignments[perm[i]]);
}

TEST_CASE("subset extraction and bounds") {
  const auto points = two_pole_blob();
  const ClusterResult result = kmeans(points, 0.01, 100, 9);
  const auto sub0 = subset(points, result, 0);
  CHECK(sub0.size() == 50);
  for (const auto& p : sub0) CHECK(p == sub0.front());
  CHECK_THROWS_AS(subset(points, result, 2), IndexOutOfRange);
}

TEST_CASE("determinism for a fixed init seed") {
  const auto [points, labels] = gaussian_blobs(33, 0.15);
  const ClusterResult a = kmeans(points, 0.01, 100, 123);
  const ClusterResult b = kmeans(points, 0.01, 100, 123);
  CHECK(a.assignments == b.assignments);
  CHECK(a.centroids[0] == b.centroids[0]);
  CHECK(a.centroids[1] == b.centroids[1]);
  CHECK(a.iterations == b.iterations);
}
