/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_RNG_HPP
#define POSMAP_RNG_HPP

#include <complex>
#include <cstdint>

namespace posmap {

// splitmix64 stream. Self-contained so that seeded results are identical on
// every platform, independent of the standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller.
  double gaussian();

  // Complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double inv_sqrt2 = 0.7071067811865475244;
    return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
  }

  // Deterministic per-stream seed derivation from a master seed.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
    Rng r(master ^ (0x5851f42d4c957f2dULL * (stream + 1)));
    return r.next_u64();
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace posmap

#endif
