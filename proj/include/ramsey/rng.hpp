#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace ramsey {

/// Stage tags mixed into the master seed. Every random artifact draws from
/// a stream keyed by (master seed, stage, index) so output never depends on
/// the order in which work items are scheduled.
enum class Stage : std::uint64_t {
  block_partition = 1,
  coloring_permutation = 2,
  block_monte_carlo = 3,
  independent_set_monte_carlo = 4,
  family_retry = 5,
  verify_sampling = 6,
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the stream of work item `index` of `stage`.
std::uint64_t derive_seed(std::uint64_t master, Stage stage, std::uint64_t index = 0) noexcept;

/// Seeded 64-bit generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the distributions below are written
/// out here because the std:: distributions are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ramsey
