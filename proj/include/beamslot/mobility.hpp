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

#ifndef BEAMSLOT_MOBILITY_HPP
#define BEAMSLOT_MOBILITY_HPP

#include <array>

#include "beamslot/rng.hpp"

namespace beamslot::mobility {

using Vec2 = std::array<double, 2>; // (x, y) [m]

// Rectangular scenario [0, width] x [0, height].
struct Bounds {
    double width = 100.0;  // [m]
    double height = 100.0; // [m]
};

// Kinematic state of one user.
struct Pose {
    Vec2 position{0.0, 0.0}; // [m]
    double heading = 0.0;    // [rad], persistent across slots
    double v_linear = 0.0;   // [m/s], >= 0
    double v_angular = 0.0;  // [rad/s]
};

struct Velocity {
    double v_linear = 0.0;  // [m/s]
    double v_angular = 0.0; // [rad/s]
};

// Distance and departure angle of a position relative to the BS array
// (ULA along the +x axis).
struct Geometry {
    double distance = 0.0; // [m]
    double theta = 0.0;    // AoD [rad], folded into (0, pi)
};

// Draws v_linear ~ Exp(1) and v_angular ~ N(0, 1).
Velocity sample_velocity(RngStream& rng);

// Advances a pose by one slot of duration dt: the angular velocity turns
// the persistent heading, the linear velocity moves the user along it,
// and the position (with heading) is specularly reflected back into the
// scenario rectangle. Velocities are unchanged. Requires dt > 0.
Pose step_pose(const Pose& pose, double dt, const Bounds& bounds);

// Euclidean distance and AoD of `position` as seen from the BS at `bs`.
// The ULA is ambiguous between theta and -theta, so the angle is folded
// into (0, pi); positions exactly on the array axis are nudged off it.
// Requires position != bs.
Geometry geometry(const Vec2& position, const Vec2& bs);

// Pushes a position radially away from the BS until it is at least
// min_range away (guards the 1/d channel gain singularity).
Vec2 enforce_min_range(const Vec2& position, const Vec2& bs, double min_range);

} // namespace beamslot::mobility

#endif
