#pragma once

#include <cmath>
#include <vector>

#include "bugs/dynamics.hpp"
#include "bugs/random.hpp"

namespace bugs::testing {

/// Shortest signed distance between two angles, in [-pi, pi].
inline double circular_diff(double a, double b)
{
    double d = std::fmod(a - b, kTwoPi);
    if (d > kPi) d -= kTwoPi;
    if (d < -kPi) d += kTwoPi;
    return d;
}

inline std::vector<double> random_angles(std::size_t n, SplitMix64& rng)
{
    std::vector<double> out(n);
    for (double& a : out) a = rng.uniform(0.0, kTwoPi);
    return out;
}

inline BugConfiguration config(std::initializer_list<double> angles)
{
    const std::vector<double> v(angles);
    return BugConfiguration::from_angles(v);
}

}  // namespace bugs::testing
