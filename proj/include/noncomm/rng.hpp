#pragma once

#include <cstdint>
#include <random>

namespace noncomm {

// splitmix64 finalizer; used to derive independent sub-stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

/// Standard-normal source for one trajectory (or one clustering run).
/// Each consumer gets its own stream so results do not depend on
/// execution order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(mix64(seed)) {}

  double normal() { return normal_(gen_); }
  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_);
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace noncomm
