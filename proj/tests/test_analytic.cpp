#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bugs/analytic.hpp"
#include "bugs/random.hpp"
#include "bugs/steady_state.hpp"

using namespace bugs;
using namespace bugs::analytic;

namespace {

// Gray share of the square of half-width alpha around (pi, pi), from plane
// geometry: each cycling quadrant is the alpha-square minus the corner cut
// off by the line u + v = pi.
double stability_geometry(double alpha)
{
    double quadrant = alpha * alpha;
    if (alpha > kPi / 2) quadrant -= 0.5 * (2 * alpha - kPi) * (2 * alpha - kPi);
    return 2 * quadrant / (4 * alpha * alpha);
}

Outcome simulate(std::initializer_list<double> angles)
{
    const std::vector<double> v(angles);
    return run_to_classification(BugConfiguration::from_angles(v), SimParams::for_bugs(v.size())).outcome;
}

}  // namespace

TEST_CASE("exact cycle probabilities")
{
    CHECK(exact_cycle_probability(2) == ExactProbability{0, 1});
    CHECK(exact_cycle_probability(3) == ExactProbability{1, 4});
    CHECK(exact_cycle_probability(4) == ExactProbability{1, 3});
    CHECK(exact_cycle_probability(3).to_string() == "1/4");
    CHECK(exact_cycle_probability(3).value() == 0.25);
    CHECK_THROWS_AS(exact_cycle_probability(5), std::invalid_argument);
    CHECK_THROWS_AS(exact_cycle_probability(1), std::invalid_argument);

    CHECK(ExactProbability::make(6, 8) == ExactProbability{3, 4});
    CHECK(ExactProbability::make(0, 5) == ExactProbability{0, 1});
    CHECK_THROWS_AS(ExactProbability::make(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ExactProbability::make(5, 4), std::invalid_argument);
}

TEST_CASE("three-bug stability curve")
{
    CHECK(stability_probability_3(kPi / 4) == 0.5);
    CHECK(stability_probability_3(kPi / 2) == doctest::Approx(0.5));
    CHECK(stability_probability_3(kPi) == doctest::Approx(0.25));
    CHECK(stability_probability_3(2 * kPi / 3) == doctest::Approx(7.0 / 16));
    for (int i = 1; i <= 200; ++i) {
        const double a = i * kPi / 200;
        CHECK(std::abs(stability_probability_3(a) - stability_geometry(a)) < 1e-12);
        if (a > kPi / 2 + 1e-12) CHECK(stability_probability_3(a) < stability_probability_3(a - kPi / 200));
    }
    CHECK_THROWS_AS(stability_probability_3(0.0), std::invalid_argument);
    CHECK_THROWS_AS(stability_probability_3(4.0), std::invalid_argument);
}

TEST_CASE("classify_3 regions")
{
    CHECK(classify_3(2 * kPi / 3, 2 * kPi / 3) == PhaseRegion::cycle_ccw);
    CHECK(classify_3(4 * kPi / 3, 4 * kPi / 3) == PhaseRegion::cycle_cw);
    CHECK(classify_3(kPi, kPi) == PhaseRegion::groups_point);
    CHECK(classify_3(0, kPi) == PhaseRegion::groups_point);
    CHECK(classify_3(kPi, 0) == PhaseRegion::groups_point);
    CHECK(classify_3(0.1, 0.1) == PhaseRegion::coalesce);
    CHECK(classify_3(kPi, 1.0) == PhaseRegion::unstable_cycle_line);
    CHECK(classify_3(0.5, 5.0) == PhaseRegion::coalesce);
    CHECK(std::string(to_string(PhaseRegion::cycle_ccw)) == "cycle_ccw");
}

TEST_CASE("classify_3 matches simulation on a sample")
{
    SplitMix64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const double w1 = rng.uniform(0, kTwoPi), w2 = rng.uniform(0, kTwoPi);
        const auto region = classify_3(w1, w2);
        const auto sim = simulate({0, w1, w1 + w2});
        if (region == PhaseRegion::cycle_ccw) CHECK(sim == Outcome::cycle(Direction::counterclockwise));
        else if (region == PhaseRegion::cycle_cw) CHECK(sim == Outcome::cycle(Direction::clockwise));
        else CHECK(sim.kind == OutcomeKind::coalesce);
    }
}

TEST_CASE("classify_3 gray area is a quarter")
{
    SplitMix64 rng(32);
    const int m = 200000;
    int gray = 0;
    for (int i = 0; i < m; ++i) {
        const auto r = classify_3(rng.uniform(0, kTwoPi), rng.uniform(0, kTwoPi));
        gray += (r == PhaseRegion::cycle_ccw || r == PhaseRegion::cycle_cw) ? 1 : 0;
    }
    CHECK(std::abs(static_cast<double>(gray) / m - 0.25) < 0.005);
}

TEST_CASE("classify_4 examples")
{
    CHECK(classify_4(kPi / 2, 5 * kPi / 4, 3 * kPi / 2) == FourBugOutcome::cycle);
    CHECK(classify_4(kPi / 2, kPi / 4, kPi / 8) == FourBugOutcome::coalesce);
    CHECK(classify_4(1.5708, 3.9270, 4.7124) == FourBugOutcome::cycle);
    // every gap below pi
    CHECK(classify_4(kPi / 2, 3 * kPi / 4, 3 * kPi / 2) == FourBugOutcome::cycle);
    // reflection of the same configuration
    CHECK(classify_4(3 * kPi / 2, 5 * kPi / 4, kPi / 2) == FourBugOutcome::cycle);

    CHECK_THROWS_AS(classify_4(kPi, 1, 2), DegenerateConfiguration);
    CHECK_THROWS_AS(classify_4(1, 1, 2), DegenerateConfiguration);
    CHECK_THROWS_AS(classify_4(1, 2, 2 + kPi), DegenerateConfiguration);
    CHECK_NOTHROW(classify_4(1, 2, 1 + kPi));
    CHECK_THROWS_AS(classify_4(0, 2, 3), DegenerateConfiguration);
}

TEST_CASE("classify_4 is reflection symmetric and matches simulation")
{
    SplitMix64 rng(33);
    int tested = 0;
    for (int i = 0; i < 2000; ++i) {
        const double t2 = rng.uniform(0, kTwoPi), t3 = rng.uniform(0, kTwoPi), t4 = rng.uniform(0, kTwoPi);
        FourBugOutcome o;
        try {
            o = classify_4(t2, t3, t4, 1e-6);
        } catch (const DegenerateConfiguration&) {
            continue;
        }
        CHECK(classify_4(kTwoPi - t2, kTwoPi - t3, kTwoPi - t4, 1e-6) == o);
        const auto sim = simulate({0, t2, t3, t4});
        CHECK((sim.kind == OutcomeKind::cycle) == (o == FourBugOutcome::cycle));
        ++tested;
    }
    CHECK(tested > 1900);
}

TEST_CASE("four-bug quadrature converges")
{
    CHECK(std::abs(four_bug_half_integral(512) - 1.0 / 6) < 1e-3);
    CHECK(std::abs(four_bug_probability_by_quadrature(512) - 1.0 / 3) < 1e-3);
    const double e128 = std::abs(four_bug_probability_by_quadrature(128) - 1.0 / 3);
    const double e256 = std::abs(four_bug_probability_by_quadrature(256) - 1.0 / 3);
    const double e512 = std::abs(four_bug_probability_by_quadrature(512) - 1.0 / 3);
    CHECK(e256 < e128);
    CHECK(e512 < e256);
    CHECK(e512 < 0.75 * e256);
    CHECK_THROWS_AS(four_bug_probability_by_quadrature(32), std::invalid_argument);
}
