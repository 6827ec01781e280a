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

#ifndef BEAMSLOT_RADIO_HPP
#define BEAMSLOT_RADIO_HPP

#include <complex>
#include <vector>

#include "beamslot/rng.hpp"

namespace beamslot::radio {

// Fixed-length complex amplitude vector (length = antenna count Mt).
// Carries channel vectors, steering vectors and codebook precoders.
using ComplexVector = std::vector<std::complex<double>>;

// Link-level constants of the BS array.
struct LinkParams {
    double pt = 1.0;             // transmit power P_t [W]
    double noise_variance = 1.0; // sensing noise variance sigma_n^2 [W]
    double fading_variance = 1.0; // complex fading variance sigma_u^2 [-]
    int mt = 2;                  // BS antenna count

    void validate() const; // throws std::invalid_argument on bad values
};

// Analog beamforming codebook: mt orthonormal DFT precoders.
// Beam indexes are 1-based throughout, matching the usual codebook
// numbering i in {1, ..., Mt}.
struct Codebook {
    std::vector<ComplexVector> precoders;
    int mt = 0;

    const ComplexVector& precoder(int beam) const; // 1-based, throws on range
    int size() const { return mt; }
};

// Result of one beam tracking (sensing) operation.
struct SensingResult {
    int beam = 1;       // selected beam index, 1-based
    double power = 0.0; // measured received power on the selected beam [W]
};

// Ideal isotropic ULA array response for departure angle theta:
// element m (0-based) is (1/sqrt(mt)) * exp(-j pi m cos(theta)).
// Unit Euclidean norm by construction. Requires mt >= 2.
ComplexVector steering_vector(double theta, int mt);

// DFT codebook: precoder i (1-based), element m (0-based) is
// (1/sqrt(mt)) * exp(-j pi m (2i - 1 - mt) / mt). Requires mt >= 2.
Codebook dft_codebook(int mt);

// Narrowband LoS channel: (sqrt(Mt) / distance) * beta * conj(a_t(theta)).
// The conjugated steering vector stored as a column means the received
// signal below uses a plain (non-conjugating) dot product h^T f.
// Requires distance > 0.
ComplexVector channel_vector(double distance, double theta, std::complex<double> beta,
                             const LinkParams& params);

// Received signal power |sqrt(Pt) * (h^T f) * s + noise|^2 with the unit
// training symbol s = 1. h and f must have equal length.
double received_power(const ComplexVector& h, const ComplexVector& f,
                      const LinkParams& params, std::complex<double> noise);

// Noiseless |sqrt(Pt) h^T f|^2, shared by the exhaustive and windowed
// beam searches.
double beam_gain(const ComplexVector& h, const ComplexVector& f, const LinkParams& params);

// Exhaustive search: argmax over all beams of the noiseless gain.
// Ties break toward the lowest beam index. Returns a 1-based index.
int best_beam_exhaustive(const ComplexVector& h, const Codebook& codebook,
                         const LinkParams& params);

// Beam tracking: measures the received power (with an independent noise
// draw per candidate) on {current-1, current, current+1} clamped to
// [1, Mt] and returns the winning beam with its measurement. Ties break
// toward the lowest beam index. Requires 1 <= current <= Mt.
SensingResult neighbor_beam_track(int current, const ComplexVector& h,
                                  const Codebook& codebook, const LinkParams& params,
                                  RngStream& rng);

} // namespace beamslot::radio

#endif
