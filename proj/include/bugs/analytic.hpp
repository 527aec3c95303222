#pragma once

// Closed-form results for two, three and four bugs.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bugs/dynamics.hpp"

namespace bugs::analytic {

/// Reduced rational in [0, 1].
struct ExactProbability {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    static ExactProbability make(std::int64_t num, std::int64_t den);

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    std::string to_string() const;

    friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
};

/// Probability that N uniformly placed bugs end in a cycle, N in {2, 3, 4}.
ExactProbability exact_cycle_probability(int n_bugs);

/// Three bugs started at the groups point (pi, pi) with both gaps perturbed
/// uniformly by at most alpha: probability of ending in a cycle.
/// Requires 0 < alpha <= pi.
double stability_probability_3(double alpha);

enum class PhaseRegion { cycle_ccw, cycle_cw, coalesce, groups_point, unstable_cycle_line };

const char* to_string(PhaseRegion r);

/// Region of the three-bug phase plane containing the gap pair (w1, w2).
PhaseRegion classify_3(double omega1, double omega2, double tol = kDefaultCoincidenceTol);

enum class FourBugOutcome { cycle, coalesce };

const char* to_string(FourBugOutcome o);

/// Thrown by classify_4 for inputs on a region boundary.
class DegenerateConfiguration : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Fate of four bugs with theta_1 = 0 and the given remaining angles.
/// Inputs within `tol` of a region boundary raise DegenerateConfiguration.
FourBugOutcome classify_4(double theta2, double theta3, double theta4,
                          double tol = kDefaultCoincidenceTol);

/// Midpoint-rule value of P(cycle and theta_2 in (0, pi)) for four bugs,
/// with `resolution` cells per pi in every coordinate. Converges to 1/6.
double four_bug_half_integral(int resolution);

/// Twice four_bug_half_integral; converges to 1/3. Requires resolution >= 64.
double four_bug_probability_by_quadrature(int resolution);

}  // namespace bugs::analytic
