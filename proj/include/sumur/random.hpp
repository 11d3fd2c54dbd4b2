#pragma once

#include <cstdint>
#include <utility>

#include "sumur/matrix.hpp"

namespace sumur {

/// SplitMix64 counter generator. Portable and fully specified so that a seed
/// produces the same stream in any implementation:
///   state += 0x9e3779b97f4a7c15; z = state;
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
///   return z ^ (z >> 31);
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on the open interval (0, 1): ((next() >> 11) + 0.5) * 2^-53.
  double uniform();
  /// Uniform integer in [0, n), n >= 1, by modulo reduction.
  std::uint64_t below(std::uint64_t n);
  /// One Box-Muller pair of independent standard normals, drawn from two
  /// consecutive uniforms u1, u2: sqrt(-2 ln u1) * (cos 2 pi u2, sin 2 pi u2).
  std::pair<double, double> gaussian_pair();
  /// Re and Im from one Box-Muller pair.
  cplx complex_gaussian();

 private:
  std::uint64_t state_;
};

/// Decorrelated child seed; used to give each consumer its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sumur
