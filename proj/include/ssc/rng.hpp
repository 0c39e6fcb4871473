#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ssc {

/// Deterministic random stream (xoshiro256** seeded via splitmix64).
/// The generator and every distribution are implemented here rather than with
/// <random> facilities because the standard leaves distribution algorithms
/// implementation-defined; identical seeds must give identical streams on any
/// platform.
///
/// Child streams are derived from (construction seed, label) only, so their
/// output does not depend on how much the parent stream has been consumed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi). Exact when lo == hi.
  double uniform(double lo, double hi);
  /// Standard Gaussian via Box-Muller (two uniforms per draw).
  double normal();
  /// Uniform integer in [0, n); unbiased via rejection. n must be > 0.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent stream keyed by (seed, label).
  SeededRng child(std::string_view label) const;

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t s_[4] = {0, 0, 0, 0};
};

}  // namespace ssc
