#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bugs/monte_carlo.hpp"
#include "bugs/steady_state.hpp"
#include "support.hpp"

using namespace bugs;
using bugs::testing::config;

namespace {

// Sort, then look for a circular gap of at least pi.
bool semicircle_oracle(std::vector<double> a)
{
    std::sort(a.begin(), a.end());
    double largest = a.front() + kTwoPi - a.back();
    for (std::size_t i = 1; i < a.size(); ++i) largest = std::max(largest, a[i] - a[i - 1]);
    return largest >= kPi - 1e-9;
}

}  // namespace

TEST_CASE("outcome names round-trip")
{
    for (auto k : {OutcomeKind::coalesce, OutcomeKind::cycle, OutcomeKind::groups, OutcomeKind::undetermined}) {
        CHECK(outcome_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(outcome_kind_from_string("spiral"), std::invalid_argument);
}

TEST_CASE("all_same_direction")
{
    CHECK(all_same_direction(config({0, 2 * kPi / 3, 4 * kPi / 3})) == Direction::counterclockwise);
    CHECK(!all_same_direction(config({0, kPi})).has_value());
    CHECK(all_same_direction(config({0, 3 * kPi / 2, kPi, kPi / 2})) == Direction::clockwise);
}

TEST_CASE("within_semicircle")
{
    CHECK(within_semicircle(config({0, 0.1, 0.2})));
    CHECK(!within_semicircle(config({0, 2 * kPi / 3, 4 * kPi / 3})));
    CHECK(within_semicircle(config({0, kPi})));

    SplitMix64 rng(21);
    for (int i = 0; i < 5000; ++i) {
        const auto a = bugs::testing::random_angles(2 + i % 8, rng);
        REQUIRE(within_semicircle(BugConfiguration::from_angles(a)) == semicircle_oracle(a));
    }
}

TEST_CASE("is_groups")
{
    CHECK(is_groups(config({0, kPi})));
    CHECK(is_groups(config({0, kPi, 0})));
    CHECK(!is_groups(config({0, 2 * kPi / 3, 4 * kPi / 3})));
    CHECK(!is_groups(config({0, 0, 0})));
}

TEST_CASE("classify_now precedence and examples")
{
    CHECK(classify_now(config({0, 0.1, 0.2})) == Outcome::of(OutcomeKind::coalesce));
    CHECK(classify_now(config({0, 2 * kPi / 3, 4 * kPi / 3})) == Outcome::cycle(Direction::counterclockwise));
    // four bugs a quarter turn apart all chase counterclockwise
    CHECK(classify_now(config({0, kPi / 2, kPi, 3 * kPi / 2})) == Outcome::cycle(Direction::counterclockwise));
    CHECK(classify_now(config({0, kPi, 0, kPi})) == Outcome::of(OutcomeKind::groups));
    // antipodal pair also passes the closed semicircle test; groups wins
    CHECK(classify_now(config({0, kPi})) == Outcome::of(OutcomeKind::groups));
    // bugs 2 and 3 antipodal, all three on a closed half circle
    CHECK(classify_now(config({0, kPi / 2, 3 * kPi / 2})) == Outcome::of(OutcomeKind::coalesce));
    // mixed directions, no half circle holds them all
    CHECK(classify_now(config({0, 3, 1.5, 4.5})) == Outcome::of(OutcomeKind::undetermined));
}

TEST_CASE("winding number")
{
    CHECK(winding_number(config({0, 2 * kPi / 3, 4 * kPi / 3})) == 1);
    std::vector<double> twice, once;
    for (int j = 0; j < 5; ++j) {
        twice.push_back(std::fmod(4 * kPi * j / 5, kTwoPi));
        once.push_back(2 * kPi * j / 5);
    }
    CHECK(winding_number(BugConfiguration::from_angles(twice)) == 2);
    CHECK(winding_number(BugConfiguration::from_angles(once)) == 1);
    for (std::size_t n = 2; n <= 20; ++n) {
        std::vector<double> a;
        for (std::size_t j = 0; j < n; ++j) a.push_back(kTwoPi * j / n);
        CHECK(winding_number(BugConfiguration::from_angles(a)) == 1);
    }
    CHECK_THROWS_AS(winding_number(config({0, 0, 1})), std::invalid_argument);

    // the mirror image winds the same number of times clockwise
    std::vector<double> mirrored;
    for (double a : twice) mirrored.push_back(kTwoPi - a);
    CHECK(winding_number(BugConfiguration::from_angles(mirrored), Direction::clockwise) == 2);
    const auto r = run_to_classification(BugConfiguration::from_angles(mirrored), SimParams{});
    CHECK(r.outcome == Outcome::cycle(Direction::clockwise));
    CHECK(r.winding == 2);
}

TEST_CASE("run_to_classification examples")
{
    const SimParams p;
    const auto near = run_to_classification(config({0, 0.1, 0.2}), p);
    CHECK(near.outcome.kind == OutcomeKind::coalesce);
    CHECK(near.t_classified == 0.0);
    CHECK(!near.winding);

    const auto eq = run_to_classification(config({0, 2 * kPi / 3, 4 * kPi / 3}), p);
    CHECK(eq.outcome == Outcome::cycle(Direction::counterclockwise));
    CHECK(eq.t_classified == 0.0);
    CHECK(eq.winding == 1);

    // gaps pushed off the groups point
    const double w = kPi / 2 + 0.3;
    const auto pert = run_to_classification(config({0, w, 2 * w}), p);
    CHECK(pert.outcome.kind != OutcomeKind::undetermined);
    CHECK(pert.t_classified < p.t_max);
    CHECK(std::abs(pert.steps * p.dt - pert.t_classified) <= p.dt);

    // a run that cannot classify in the allotted time
    SimParams short_run;
    short_run.t_max = 0.05;
    const auto und = run_to_classification(config({0, 3, 1.5, 4.5}), short_run);
    CHECK(und.outcome.kind == OutcomeKind::undetermined);
    CHECK(und.t_classified <= short_run.t_max + 1e-12);
}

TEST_CASE("run_full examples")
{
    const SimParams p;
    const auto pair = run_full(config({0, 0.4}), p);
    CHECK(pair.outcome.kind == OutcomeKind::coalesce);
    const auto& last = pair.trajectory.back();
    CHECK(last.config.coalesced());
    CHECK(std::abs(last.t - 0.2) <= p.dt);
    CHECK(std::abs(last.config.angle(0) - 0.2) < 1e-9);

    const auto eq = run_full(config({0, 2 * kPi / 3, 4 * kPi / 3}), p, 7);
    CHECK(eq.outcome.kind == OutcomeKind::cycle);
    CHECK(eq.t_final >= kTwoPi - p.dt);
    for (const auto& s : eq.trajectory) {
        const auto g = gaps(s.config);
        CHECK(std::abs(g[0] - 2 * kPi / 3) < 1e-10);
        CHECK(std::abs(g[1] - 2 * kPi / 3) < 1e-10);
    }

    const auto anti = run_full(config({0, kPi}), p);
    CHECK(anti.outcome.kind == OutcomeKind::groups);
    CHECK(anti.steps == 0);
    for (const auto& s : anti.trajectory) CHECK(s.config == config({0, kPi}));
}

TEST_CASE("trajectory stride records every k-th step and the final state")
{
    const SimParams p;
    const double w = kPi / 2 + 0.3;
    const auto r = run_to_classification(config({0, w, 2 * w}), p, 5);
    REQUIRE(!r.trajectory.empty());
    CHECK(r.trajectory.front().t == 0.0);
    CHECK(r.trajectory.back().t == doctest::Approx(r.t_classified));
    for (std::size_t i = 1; i + 1 < r.trajectory.size(); ++i) {
        CHECK(r.trajectory[i].t - r.trajectory[i - 1].t == doctest::Approx(5 * p.dt));
    }
}

TEST_CASE("certificates are sound on random starts")
{
    SplitMix64 rng(22);
    int cycles = 0, coalesces = 0;
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 3 + i % 8;
        const auto initial = mc::sample_initial(n, rng);
        const SimParams p = SimParams::for_bugs(n);
        const auto r = run_to_classification(initial, p);
        REQUIRE(r.outcome.kind != OutcomeKind::undetermined);
        const auto full = run_full(initial, p, 1000000);
        const auto& end = full.trajectory.back().config;
        if (r.outcome.kind == OutcomeKind::cycle) {
            ++cycles;
            // no merge after the certificate
            const auto at_cert = run_to_classification(initial, p, 1000000).trajectory.back().config;
            CHECK(end.cluster_count() == at_cert.cluster_count());
            CHECK(all_same_direction(end) == r.outcome.cycle_direction);
        } else {
            ++coalesces;
            CHECK(end.coalesced());
        }
    }
    CHECK(cycles > 100);
    CHECK(coalesces > 100);
}
