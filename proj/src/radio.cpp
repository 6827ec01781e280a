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

#include "beamslot/radio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamslot::radio {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Plain (non-conjugating) dot product h^T f.
std::complex<double> dot(const ComplexVector& a, const ComplexVector& b)
{
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < a.size(); ++m)
        acc += a[m] * b[m];
    return acc;
}

void require_equal_length(const ComplexVector& h, const ComplexVector& f)
{
    if (h.size() != f.size())
        throw std::invalid_argument("vector length mismatch: " + std::to_string(h.size()) +
                                    " vs " + std::to_string(f.size()));
}

} // namespace

void LinkParams::validate() const
{
    if (pt <= 0.0)
        throw std::invalid_argument("LinkParams: pt must be positive");
    if (noise_variance <= 0.0)
        throw std::invalid_argument("LinkParams: noise_variance must be positive");
    if (fading_variance <= 0.0)
        throw std::invalid_argument("LinkParams: fading_variance must be positive");
    if (mt < 2)
        throw std::invalid_argument("LinkParams: mt must be >= 2");
}

const ComplexVector& Codebook::precoder(int beam) const
{
    if (beam < 1 || beam > mt)
        throw std::out_of_range("Codebook: beam index " + std::to_string(beam) +
                                " outside [1, " + std::to_string(mt) + "]");
    return precoders[static_cast<std::size_t>(beam - 1)];
}

ComplexVector steering_vector(double theta, int mt)
{
    if (mt < 2)
        throw std::invalid_argument("steering_vector: mt must be >= 2");
    const double scale = 1.0 / std::sqrt(static_cast<double>(mt));
    const double spatial_freq = std::cos(theta);
    ComplexVector a(static_cast<std::size_t>(mt));
    for (int m = 0; m < mt; ++m)
        a[static_cast<std::size_t>(m)] = std::polar(scale, -kPi * m * spatial_freq);
    return a;
}

Codebook dft_codebook(int mt)
{
    if (mt < 2)
        throw std::invalid_argument("dft_codebook: mt must be >= 2");
    Codebook cb;
    cb.mt = mt;
    cb.precoders.reserve(static_cast<std::size_t>(mt));
    const double scale = 1.0 / std::sqrt(static_cast<double>(mt));
    for (int i = 1; i <= mt; ++i) {
        // Beam i points at spatial frequency (2i - 1 - mt) / mt.
        const double spatial_freq = static_cast<double>(2 * i - 1 - mt) / mt;
        ComplexVector f(static_cast<std::size_t>(mt));
        for (int m = 0; m < mt; ++m)
            f[static_cast<std::size_t>(m)] = std::polar(scale, -kPi * m * spatial_freq);
        cb.precoders.push_back(std::move(f));
    }
    return cb;
}

ComplexVector channel_vector(double distance, double theta, std::complex<double> beta,
                             const LinkParams& params)
{
    if (distance <= 0.0)
        throw std::invalid_argument("channel_vector: distance must be positive");
    ComplexVector h = steering_vector(theta, params.mt);
    const std::complex<double> gain = std::sqrt(static_cast<double>(params.mt)) / distance * beta;
    for (auto& element : h)
        element = gain * std::conj(element);
    return h;
}

double received_power(const ComplexVector& h, const ComplexVector& f,
                      const LinkParams& params, std::complex<double> noise)
{
    require_equal_length(h, f);
    const std::complex<double> signal = std::sqrt(params.pt) * dot(h, f) + noise;
    return std::norm(signal);
}

double beam_gain(const ComplexVector& h, const ComplexVector& f, const LinkParams& params)
{
    require_equal_length(h, f);
    return params.pt * std::norm(dot(h, f));
}

int best_beam_exhaustive(const ComplexVector& h, const Codebook& codebook,
                         const LinkParams& params)
{
    int best = 1;
    double best_gain = beam_gain(h, codebook.precoder(1), params);
    for (int i = 2; i <= codebook.mt; ++i) {
        const double gain = beam_gain(h, codebook.precoder(i), params);
        if (gain > best_gain) {
            best_gain = gain;
            best = i;
        }
    }
    return best;
}

SensingResult neighbor_beam_track(int current, const ComplexVector& h,
                                  const Codebook& codebook, const LinkParams& params,
                                  RngStream& rng)
{
    if (current < 1 || current > codebook.mt)
        throw std::out_of_range("neighbor_beam_track: current beam " + std::to_string(current) +
                                " outside [1, " + std::to_string(codebook.mt) + "]");
    const int lo = std::max(1, current - 1);
    const int hi = std::min(codebook.mt, current + 1);
    SensingResult result;
    result.beam = 0;
    result.power = -1.0;
    // Ascending candidate order keeps argmax ties on the lowest index.
    for (int i = lo; i <= hi; ++i) {
        const std::complex<double> noise = rng.complex_normal(params.noise_variance);
        const double power = received_power(h, codebook.precoder(i), params, noise);
        if (power > result.power) {
            result.power = power;
            result.beam = i;
        }
    }
    return result;
}

} // namespace beamslot::radio
