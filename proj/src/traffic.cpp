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

#include "beamslot/traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace beamslot::traffic {

bool Buffer::push()
{
    if (occupancy < capacity) {
        ++occupancy;
        return false;
    }
    return true;
}

bool Buffer::pop()
{
    if (occupancy > 0) {
        --occupancy;
        return true;
    }
    return false;
}

void TrafficConfig::validate() const
{
    if (p_arrival < 0.0 || p_arrival > 1.0)
        throw std::invalid_argument("TrafficConfig: p_arrival must lie in [0, 1]");
    if (p_dl < 0.0 || p_dl > 1.0 || p_ul < 0.0 || p_ul > 1.0)
        throw std::invalid_argument("TrafficConfig: direction splits must lie in [0, 1]");
    if (std::abs(p_dl + p_ul - 1.0) > 1e-12)
        throw std::invalid_argument("TrafficConfig: p_dl + p_ul must equal 1");
}

Arrivals sample_arrivals(const TrafficConfig& cfg, RngStream& rng)
{
    Arrivals a;
    a.dl = rng.bernoulli(cfg.p_arrival * cfg.p_dl);
    a.ul = rng.bernoulli(cfg.p_arrival * cfg.p_ul);
    return a;
}

} // namespace beamslot::traffic
