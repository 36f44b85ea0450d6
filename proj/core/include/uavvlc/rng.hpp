#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace uavvlc {

/// Deterministic random stream used by every stochastic step of a run.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are derived here rather than through
/// <random> distribution objects, whose algorithms are implementation
/// defined, so a given seed yields the same draws on every platform.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform in (0, 1); never returns exactly zero.
  double uniform_open01() {
    double u = uniform01();
    while (u == 0.0) {
      u = uniform01();
    }
    return u;
  }

  /// Unbiased integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    const auto range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine_();
    while (draw >= limit) {
      draw = engine_();
    }
    return static_cast<std::size_t>(draw % range);
  }

  std::uint64_t operator()() { return engine_(); }
  static constexpr std::uint64_t min() { return std::mt19937_64::min(); }
  static constexpr std::uint64_t max() { return std::mt19937_64::max(); }

private:
  std::mt19937_64 engine_;
};

} // namespace uavvlc
