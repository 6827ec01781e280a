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

#include "beamslot/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamslot {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    // splitmix64 finalizer; bijective, so distinct indexes give distinct seeds.
    std::uint64_t z = base ^ index;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double RngStream::uniform()
{
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_int(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("uniform_int: n must be >= 1");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do
        x = gen_();
    while (x >= limit);
    return x % n;
}

double RngStream::normal()
{
    // 1 - uniform() lies in (0, 1], keeping the log argument positive.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::exponential(double rate)
{
    if (rate <= 0.0)
        throw std::invalid_argument("exponential: rate must be positive");
    return -std::log(1.0 - uniform()) / rate;
}

bool RngStream::bernoulli(double p)
{
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
    return uniform() < p;
}

std::complex<double> RngStream::complex_normal(double variance)
{
    if (variance < 0.0)
        throw std::invalid_argument("complex_normal: variance must be >= 0");
    const double scale = std::sqrt(variance / 2.0);
    const double re = scale * normal();
    const double im = scale * normal();
    return {re, im};
}

} // namespace beamslot
