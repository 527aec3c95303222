#include "bugs/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bugs::analytic {

ExactProbability ExactProbability::make(std::int64_t num, std::int64_t den)
{
    if (den <= 0 || num < 0 || num > den) throw std::invalid_argument("probability must be in [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

std::string ExactProbability::to_string() const
{
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

ExactProbability exact_cycle_probability(int n_bugs)
{
    switch (n_bugs) {
    case 2: return ExactProbability::make(0, 1);
    case 3: return ExactProbability::make(1, 4);
    case 4: return ExactProbability::make(1, 3);
    default:
        throw std::invalid_argument("no closed form for N = " + std::to_string(n_bugs) +
                                    "; exact values exist for N in {2, 3, 4}");
    }
}

double stability_probability_3(double alpha)
{
    if (!(alpha > 0.0) || alpha > kPi) throw std::invalid_argument("alpha must lie in (0, pi]");
    if (alpha <= kPi / 2.0) return 0.5;
    const double q = kPi / alpha;
    return 0.25 * (-q * q + 4.0 * q - 2.0);
}

const char* to_string(PhaseRegion r)
{
    switch (r) {
    case PhaseRegion::cycle_ccw: return "cycle_ccw";
    case PhaseRegion::cycle_cw: return "cycle_cw";
    case PhaseRegion::coalesce: return "coalesce";
    case PhaseRegion::groups_point: return "groups_point";
    case PhaseRegion::unstable_cycle_line: return "unstable_cycle_line";
    }
    return "coalesce";
}

const char* to_string(FourBugOutcome o)
{
    return o == FourBugOutcome::cycle ? "cycle" : "coalesce";
}

namespace {

bool near_zero(double w, double tol) { return w < tol || w > kTwoPi - tol; }
bool near_pi(double w, double tol) { return std::abs(w - kPi) < tol; }

// Circular distance between two angles.
double separation(double a, double b)
{
    const double g = ccw_gap(a, b);
    return std::min(g, kTwoPi - g);
}

// x on the open counterclockwise arc from a to b.
bool on_arc(double x, double a, double b)
{
    const double to_x = ccw_gap(a, x);
    return to_x > 0.0 && to_x < ccw_gap(a, b);
}

}  // namespace

PhaseRegion classify_3(double omega1, double omega2, double tol)
{
    const double w1 = wrap_angle(omega1);
    const double w2 = wrap_angle(omega2);
    const bool z1 = near_zero(w1, tol), z2 = near_zero(w2, tol);
    const bool p1 = near_pi(w1, tol), p2 = near_pi(w2, tol);

    if ((z1 && p2) || (p1 && p2) || (p1 && z2)) return PhaseRegion::groups_point;
    if (p1 || p2) return PhaseRegion::unstable_cycle_line;
    if (!z1 && !z2 && w1 < kPi && w2 < kPi && w1 + w2 > kPi) return PhaseRegion::cycle_ccw;
    if (w1 > kPi && w2 > kPi && w1 + w2 < 3.0 * kPi) return PhaseRegion::cycle_cw;
    return PhaseRegion::coalesce;
}

FourBugOutcome classify_4(double theta2, double theta3, double theta4, double tol)
{
    double t2 = wrap_angle(theta2), t3 = wrap_angle(theta3), t4 = wrap_angle(theta4);
    if (t2 > kPi) {
        // mirror image: clockwise and counterclockwise swap, fate is kept
        t2 = wrap_angle(-t2);
        t3 = wrap_angle(-t3);
        t4 = wrap_angle(-t4);
    }

    const double boundaries3[] = {0.0, t2, kPi, t2 + kPi};
    const double boundaries4[] = {0.0, kPi, t3, t3 + kPi};
    bool degenerate = near_zero(t2, tol) || near_pi(t2, tol);
    for (double b : boundaries3) degenerate = degenerate || separation(t3, b) < tol;
    for (double b : boundaries4) degenerate = degenerate || separation(t4, b) < tol;
    if (degenerate) {
        throw DegenerateConfiguration("four-bug configuration lies on a region boundary");
    }

    bool cycle = false;
    if (t3 < t2 + kPi) {
        // third bug in (0, t2), (t2, pi) or (pi, t2 + pi); the arc may wrap past 2pi
        cycle = on_arc(t4, kPi, t3 + kPi);
    } else {
        cycle = on_arc(t4, t3 - kPi, kPi);
    }
    return cycle ? FourBugOutcome::cycle : FourBugOutcome::coalesce;
}

namespace {

// The grid has `res` cells per pi. Angles are measured in half-cells, so
// cell midpoints sit at odd integers and every region boundary at an
// integer: membership is decided exactly, with boundary hits weighted 1/2.
double open_weight(std::int64_t x, std::int64_t lo, std::int64_t hi)
{
    if (lo >= hi) return 0.0;
    if (x > lo && x < hi) return 1.0;
    if (x == lo || x == hi) return 0.5;
    return 0.0;
}

// Midpoint-rule mass of (lo, hi) on the odd grid 1, 3, ..., top - 1.
double interval_mass(std::int64_t lo, std::int64_t hi, std::int64_t top)
{
    if (hi > top) return interval_mass(lo, top, top) + interval_mass(0, hi - top, top);
    const std::int64_t a = std::max<std::int64_t>(lo, 0);
    const std::int64_t b = std::min(hi, top);
    if (a >= b) return 0.0;
    // odd m with a < m < b
    const std::int64_t m_min = a % 2 == 0 ? a + 1 : a + 2;
    const std::int64_t m_max = b % 2 == 0 ? b - 1 : b - 2;
    double mass = m_max >= m_min ? static_cast<double>((m_max - m_min) / 2 + 1) : 0.0;
    if ((a % 2) == 1 && a == lo) mass += 0.5;
    if ((b % 2) == 1 && b == hi) mass += 0.5;
    return mass;
}

}  // namespace

double four_bug_half_integral(int resolution)
{
    if (resolution < 1) throw std::invalid_argument("resolution must be positive");
    const std::int64_t res = resolution;
    const std::int64_t pi = 2 * res;  // pi in half-cells
    const std::int64_t two_pi = 4 * res;

    double mass = 0.0;
    for (std::int64_t i = 0; i < res; ++i) {
        const std::int64_t t2 = 2 * i + 1;
        for (std::int64_t j = 0; j < 2 * res; ++j) {
            const std::int64_t t3 = 2 * j + 1;
            mass += open_weight(t3, 0, t2) * interval_mass(pi, t3 + pi, two_pi);
            mass += open_weight(t3, t2, pi) * interval_mass(pi, t3 + pi, two_pi);
            mass += open_weight(t3, pi, t2 + pi) * interval_mass(pi, t3 + pi, two_pi);
            mass += open_weight(t3, t2 + pi, two_pi) * interval_mass(t3 - pi, pi, two_pi);
        }
    }
    // each midpoint carries volume h^3 with h = pi / res; normalize by (2pi)^3
    const double cells_per_two_pi = 2.0 * static_cast<double>(res);
    return mass / (cells_per_two_pi * cells_per_two_pi * cells_per_two_pi);
}

double four_bug_probability_by_quadrature(int resolution)
{
    if (resolution < 64) throw std::invalid_argument("resolution must be at least 64");
    return 2.0 * four_bug_half_integral(resolution);
}

}  // namespace bugs::analytic
