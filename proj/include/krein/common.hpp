#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace krein {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

inline constexpr double kPi = std::numbers::pi;

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// SplitMix64 (Steele/Lea/Flood 2014): fixed so random fixtures are
/// reproducible across languages and runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_sym() { return 2.0 * next_unit() - 1.0; }

  cplx next_cplx() {
    double re = next_sym();
    return {re, next_sym()};
  }

 private:
  std::uint64_t state_;
};

}  // namespace krein
