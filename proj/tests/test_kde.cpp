#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "noncomm/kde.hpp"

using namespace noncomm;

namespace {

std::vector<double> normal_samples(double mean, double sd, int n,
                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(mean, sd);
  std::vector<double> out(n);
  for (auto& s : out) s = dist(gen);
  return out;
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("ksdensity normalization and shape") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto samples = normal_samples(0.3, 2.0, 500, seed);
    const DensityCurve curve = ksdensity(samples);
    CHECK(curve.grid.size() == 100);
    for (double d : curve.density) CHECK(d >= 0.0);
    CHECK(trapezoid(curve.grid, curve.density) ==
          doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("ksdensity converges to the standard normal pdf") {
  const auto samples = normal_samples(0.0, 1.0, 100000, 5);
  const DensityCurve curve = ksdensity(samples);
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    worst = std::max(worst,
                     std::abs(curve.density[i] - normal_pdf(curve.grid[i])));
  CHECK(worst < 0.02);
}

TEST_CASE("ksdensity rejects degenerate samples") {
  std::vector<double> flat(100, 5.0);
  CHECK_THROWS_AS(ksdensity(flat), InsufficientSpread);
  CHECK_THROWS_AS(ksdensity(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("ksdensity is translation-equivariant") {
  const auto samples = normal_samples(0.0, 1.5, 400, 9);
  const DensityCurve base = ksdensity(samples);
  const double shift = 2.75;  // exactly representable
  std::vector<double> shifted(samples);
  for (auto& s : shifted) s += shift;
  const DensityCurve moved = ksdensity(shifted);
  for (std::size_t i = 0; i < base.grid.size(); ++i) {
    CHECK(moved.grid[i] == doctest::Approx(base.grid[i] + shift).epsilon(1e-12));
    CHECK(moved.density[i] == doctest::Approx(base.density[i]).epsilon(1e-12));
  }
}

TEST_CASE("silverman bandwidth uses the robust min(std, IQR/1.34)") {
  const auto samples = normal_samples(0.0, 1.0, 10000, 3);
  const double h = silverman_bandwidth(samples);
  // For a standard normal, std ~ 1 and IQR/1.34 ~ 1; h ~ 0.9 n^(-1/5).
  CHECK(h == doctest::Approx(0.9 * std::pow(10000.0, -0.2)).epsilon(0.05));
}

TEST_CASE("overlap of identical curves is 1") {
  const auto samples = normal_samples(1.0, 0.5, 2000, 11);
  const DensityCurve curve = ksdensity(samples);
  CHECK(overlap_proportion(curve, curve) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("overlap of disjoint curves is 0") {
  const auto a = ksdensity(normal_samples(0.0, 0.01, 500, 13));
  const auto b = ksdensity(normal_samples(100.0, 0.01, 500, 14));
  CHECK(overlap_proportion(a, b) == doctest::Approx(0.0));
}

TEST_CASE("overlap matches the closed form for two unit normals") {
  // Means 0 and 2: overlap = 2*CDF(-1) ~ 0.3173.
  const auto a = ksdensity(normal_samples(0.0, 1.0, 100000, 15));
  const auto b = ksdensity(normal_samples(2.0, 1.0, 100000, 16));
  const double expected = std::erfc(1.0 / std::sqrt(2.0));
  CHECK(overlap_proportion(a, b) == doctest::Approx(expected).epsilon(0.07));
}

TEST_CASE("overlap is symmetric and bounded") {
  const auto a = ksdensity(normal_samples(0.0, 1.0, 800, 17));
  const auto b = ksdensity(normal_samples(0.7, 1.4, 800, 18));
  const double ab = overlap_proportion(a, b);
  CHECK(ab == overlap_proportion(b, a));
  CHECK(ab >= 0.0);
  CHECK(ab <= 1.0);
}
