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

#ifndef BEAMSLOT_TRAFFIC_HPP
#define BEAMSLOT_TRAFFIC_HPP

#include "beamslot/rng.hpp"

namespace beamslot::traffic {

// Finite FIFO packet buffer. Only occupancy counts matter; payloads,
// deadlines and retransmissions are out of scope.
struct Buffer {
    int occupancy = 0;
    int capacity = 0;

    bool full() const { return occupancy >= capacity; }
    bool empty() const { return occupancy == 0; }

    // Enqueues one packet. Returns true if the packet was dropped
    // because the buffer is full (occupancy unchanged in that case).
    bool push();

    // Dequeues one packet. Returns true if a packet was available.
    bool pop();
};

// Per-user Bernoulli arrival parameters.
struct TrafficConfig {
    double p_arrival = 0.0; // per-user packet generation probability P^u
    double p_dl = 0.5;      // downlink split
    double p_ul = 0.5;      // uplink split

    void validate() const; // probabilities in [0,1], p_dl + p_ul == 1
};

struct Arrivals {
    bool dl = false;
    bool ul = false;
};

// One slot of arrivals: dl ~ Bernoulli(P^u * p_dl), ul ~ Bernoulli(P^u * p_ul),
// drawn independently.
Arrivals sample_arrivals(const TrafficConfig& cfg, RngStream& rng);

} // namespace beamslot::traffic

#endif
