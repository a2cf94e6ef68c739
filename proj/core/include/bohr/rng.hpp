#pragma once

#include <cstdint>
#include <limits>

#include "bohr/linalg.hpp"

namespace bohr {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of trial `index` in a campaign keyed by `master`. Depends only on the
/// pair, so trials can run in any order or in parallel.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Counter-based stream: the k-th draw is a pure function of (key, k).
/// Gaussians use Box-Muller on two fresh draws so no state beyond the
/// counter is carried.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  /// [0, 1)
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// exp(uniform(log lo, log hi))
  double log_uniform(double lo, double hi) noexcept;
  /// Uniform integer in [0, n), n > 0.
  std::size_t below(std::size_t n) noexcept;
  double gaussian() noexcept;
  /// (x + iy)/sqrt(2), unit variance.
  Complex complex_gaussian() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bohr
