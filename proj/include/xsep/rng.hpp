// Copyright 2026 The xsep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace xsep {

/// splitmix64 step; used only to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for substream `index` of stream `tag` under a root seed. Generators
/// built from distinct (tag, index) pairs are independent, and the whole
/// scheme is reproducible bit for bit: mt19937_64 and the mixing below are
/// fully specified, and no platform-dependent <random> distributions are
/// used anywhere.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag,
                                    std::uint64_t index) {
  std::uint64_t st = seed;
  (void)splitmix64(st);
  st ^= tag * 0x9e3779b97f4a7c15ULL;
  (void)splitmix64(st);
  st ^= index;
  return splitmix64(st);
}

/// Deterministic RNG: mt19937_64 plus hand-rolled double/complex draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::complex<double> unit_phase() {
    const double t = uniform(0.0, 6.283185307179586);
    return {std::cos(t), std::sin(t)};
  }

  /// Standard complex normal via Box-Muller on our own uniforms.
  std::complex<double> complex_normal() {
    double u = uniform();
    while (u <= 0) u = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = uniform(0.0, 6.283185307179586);
    return {r * std::cos(t) * 0.7071067811865476,
            r * std::sin(t) * 0.7071067811865476};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace xsep
