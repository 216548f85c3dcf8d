#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace gk {

// Counter-splittable 64-bit generator (SplitMix64 core).  Monte Carlo code
// never shares one stream across workers: each fixed-size chunk of samples
// draws from its own stream derived from (seed, chunk index), so results do
// not depend on how chunks are scheduled onto threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream for chunk `chunk` of a run seeded with `seed`: the chunk-th
  // output of a SplitMix64 stream becomes the initial state, so chunk
  // orbits sit at well-mixed, far-apart points of the underlying Weyl
  // cycle.  (Deriving states by XOR with multiples of the Weyl increment
  // instead makes neighbouring chunks near-shifts of one another and
  // correlates their samples.)
  static Rng for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (chunk + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return Rng(z);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0,1].  The +1 keeps log() in Box-Muller finite.
  double next_uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal, Box-Muller.  One value per call, second is cached.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Complex coordinate of the standard complex Gaussian: real and imaginary
  // parts independent with variance 1/2 each, so E|z|^2 = 1.
  std::complex<double> next_complex_normal() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const double re = next_normal() * inv_sqrt2;
    const double im = next_normal() * inv_sqrt2;
    return {re, im};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gk
