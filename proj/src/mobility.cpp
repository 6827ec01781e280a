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

#include "beamslot/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace beamslot::mobility {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Keeps the AoD strictly inside (0, pi) for positions on the array axis.
constexpr double kThetaMargin = 1e-9;

// Reflects a coordinate into [0, extent], flipping `flip` once per bounce.
double reflect_coordinate(double x, double extent, bool& flip)
{
    while (x < 0.0 || x > extent) {
        if (x < 0.0)
            x = -x;
        else
            x = 2.0 * extent - x;
        flip = !flip;
    }
    return x;
}

} // namespace

Velocity sample_velocity(RngStream& rng)
{
    Velocity v;
    v.v_linear = rng.exponential(1.0);
    v.v_angular = rng.normal();
    return v;
}

Pose step_pose(const Pose& pose, double dt, const Bounds& bounds)
{
    if (dt <= 0.0)
        throw std::invalid_argument("step_pose: dt must be positive");

    Pose next = pose;
    const double omega = pose.v_angular * dt;
    next.heading = pose.heading + omega;

    next.position[0] = pose.position[0] + pose.v_linear * std::cos(next.heading) * dt;
    next.position[1] = pose.position[1] + pose.v_linear * std::sin(next.heading) * dt;

    bool flip_x = false;
    bool flip_y = false;
    next.position[0] = reflect_coordinate(next.position[0], bounds.width, flip_x);
    next.position[1] = reflect_coordinate(next.position[1], bounds.height, flip_y);
    if (flip_x)
        next.heading = kPi - next.heading;
    if (flip_y)
        next.heading = -next.heading;
    next.heading = std::remainder(next.heading, 2.0 * kPi);
    return next;
}

Geometry geometry(const Vec2& position, const Vec2& bs)
{
    const double dx = position[0] - bs[0];
    const double dy = position[1] - bs[1];
    const double distance = std::hypot(dx, dy);
    if (distance == 0.0)
        throw std::invalid_argument("geometry: position coincides with the BS");
    Geometry g;
    g.distance = distance;
    // The ULA cannot distinguish theta from -theta; fold onto (0, pi).
    double theta = std::atan2(std::abs(dy), dx);
    if (theta < kThetaMargin)
        theta = kThetaMargin;
    else if (theta > kPi - kThetaMargin)
        theta = kPi - kThetaMargin;
    g.theta = theta;
    return g;
}

Vec2 enforce_min_range(const Vec2& position, const Vec2& bs, double min_range)
{
    const double dx = position[0] - bs[0];
    const double dy = position[1] - bs[1];
    const double distance = std::hypot(dx, dy);
    if (distance >= min_range)
        return position;
    if (distance == 0.0)
        return {bs[0] + min_range, bs[1]}; // degenerate overlap, push along +x
    const double scale = min_range / distance;
    return {bs[0] + dx * scale, bs[1] + dy * scale};
}

} // namespace beamslot::mobility
