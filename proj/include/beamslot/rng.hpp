// SPDX-License-Identifier: Apache-2.0
//
// beamslot - joint mmWave beam tracking and TDD slot allocation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSLOT_RNG_HPP
#define BEAMSLOT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace beamslot {

// Derives an independent child seed from a base seed and an index/tag.
// Used to split one campaign seed into per-episode and per-subsystem
// streams without collisions (splitmix64 finalizer on base ^ index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Stream tags for the per-subsystem RNG streams of one episode.
inline constexpr std::uint64_t kSeedTagMobility = 0x6d6f62696c697479ULL; // "mobility"
inline constexpr std::uint64_t kSeedTagFading = 0x666164696e672121ULL;   // "fading!!"
inline constexpr std::uint64_t kSeedTagNoise = 0x6e6f697365212121ULL;    // "noise!!!"
inline constexpr std::uint64_t kSeedTagTraffic = 0x7472616666696321ULL;  // "traffic!"
inline constexpr std::uint64_t kSeedTagPolicy = 0x706f6c6963792121ULL;   // "policy!!"
inline constexpr std::uint64_t kSeedTagWeights = 0x7765696768747321ULL;  // "weights!"
inline constexpr std::uint64_t kSeedTagTrain = 0x747261696e212121ULL;    // "train!!!"

// Seeded random stream with samplers implemented on top of the raw
// mt19937_64 output so that draw sequences are identical across
// platforms and standard library versions (std::*_distribution is
// implementation defined and would break bit-exact reproducibility).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t n);

    // Standard normal via Box-Muller (two uniforms per draw, no cache).
    double normal();

    // Exponential with the given rate (mean 1/rate).
    double exponential(double rate = 1.0);

    // Bernoulli with success probability p.
    bool bernoulli(double p);

    // Circularly symmetric complex Gaussian CN(0, variance):
    // real and imaginary parts are independent N(0, variance / 2).
    std::complex<double> complex_normal(double variance);

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

} // namespace beamslot

#endif
