#pragma once

#include <span>
#include <vector>

#include "bugs/dynamics.hpp"
#include "bugs/steady_state.hpp"

namespace bugs {

/// r e^{i psi} = (1/N) sum_j e^{i theta_j}. psi is meaningless when r is
/// below 1e-12; psi_defined is false then and psi is reported as 0.
struct OrderParameterSample {
    double t = 0.0;
    double r = 0.0;
    double psi = 0.0;
    bool psi_defined = false;

    friend bool operator==(const OrderParameterSample&, const OrderParameterSample&) = default;
};

inline constexpr double kPsiUndefinedBelow = 1e-12;

OrderParameterSample order_parameter(const BugConfiguration& config, double t = 0.0);

/// One sample per trajectory point, in time order.
std::vector<OrderParameterSample> track(std::span<const TrajectorySample> trajectory);

/// Continuous phase: removes the 2pi jumps of the wrapped psi series.
/// Samples with undefined psi repeat the previous unwrapped value.
std::vector<double> unwrapped_phase(std::span<const OrderParameterSample> samples);

/// Least-squares slope of unwrapped psi against t over samples with
/// r > r_min.
double phase_slope(std::span<const OrderParameterSample> samples, double r_min = 1e-6);

}  // namespace bugs
