#include <doctest.h>

#include <cmath>
#include <complex>

#include "bugs/order_param.hpp"
#include "support.hpp"

using namespace bugs;
using bugs::testing::circular_diff;
using bugs::testing::config;

TEST_CASE("order parameter of fixed configurations")
{
    const auto same = order_parameter(config({1.0, 1.0, 1.0}), 2.5);
    CHECK(same.t == 2.5);
    CHECK(std::abs(same.r - 1) < 1e-12);
    CHECK(std::abs(same.psi - 1.0) < 1e-12);
    CHECK(same.psi_defined);

    for (std::size_t n = 2; n <= 12; ++n) {
        std::vector<double> a;
        for (std::size_t j = 0; j < n; ++j) a.push_back(kTwoPi * j / n);
        const auto s = order_parameter(BugConfiguration::from_angles(a));
        CHECK(s.r < 1e-12);
        CHECK(!s.psi_defined);
        CHECK(s.psi == 0.0);
    }

    const auto q = order_parameter(config({0, kPi / 2}));
    CHECK(std::abs(q.r - std::sqrt(2.0) / 2) < 1e-12);
    CHECK(std::abs(q.psi - kPi / 4) < 1e-12);
}

TEST_CASE("order parameter reconstructs the mean and rotates covariantly")
{
    SplitMix64 rng(51);
    for (int i = 0; i < 1000; ++i) {
        const auto a = bugs::testing::random_angles(2 + i % 30, rng);
        const auto c = BugConfiguration::from_angles(a);
        const auto s = order_parameter(c);
        std::complex<double> mean{};
        for (double x : a) mean += std::polar(1.0, x);
        mean /= static_cast<double>(a.size());
        CHECK(std::abs(std::polar(s.r, s.psi) - mean) < 1e-12);
        CHECK(s.r >= 0.0);
        CHECK(s.r <= 1.0);
        CHECK(s.psi >= 0.0);
        CHECK(s.psi < kTwoPi);

        const double phi = rng.uniform(0, kTwoPi);
        const auto r = order_parameter(c.rotated(phi));
        CHECK(std::abs(r.r - s.r) < 1e-12);
        CHECK(std::abs(circular_diff(r.psi, s.psi + phi)) < 1e-12);
    }
}

TEST_CASE("phase unwrapping and slope")
{
    std::vector<OrderParameterSample> s;
    for (int i = 0; i < 100; ++i) {
        const double t = 0.1 * i;
        s.push_back({t, 0.5, wrap_angle(-t), true});
    }
    const auto u = unwrapped_phase(s);
    for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] - u[i - 1] == doctest::Approx(-0.1));
    CHECK(phase_slope(s) == doctest::Approx(-1.0));

    s[50].psi_defined = false;
    s[50].r = 0;
    s[50].psi = 0;
    const auto gap = unwrapped_phase(s);
    CHECK(gap[50] == gap[49]);
    CHECK(phase_slope(s) == doctest::Approx(-1.0));
}

TEST_CASE("tracked signatures")
{
    const SimParams p;
    const auto eq = run_full(config({0, 2 * kPi / 3, 4 * kPi / 3}), p, 5);
    for (const auto& s : track(eq.trajectory)) CHECK(s.r < 1e-12);

    // coalescing pair
    const auto pair = track(run_full(config({0, 1.0}), p).trajectory);
    CHECK(std::abs(pair.back().r - 1) < 1e-12);

    // clockwise cycle with a fused pair: r stays put, psi falls at unit rate
    const auto cw = run_full(config({0, 0, 4 * kPi / 3, 2 * kPi / 3}), p, 3);
    REQUIRE(cw.outcome == Outcome::cycle(Direction::clockwise));
    const auto series = track(cw.trajectory);
    double rmin = 1, rmax = 0;
    for (const auto& s : series) {
        rmin = std::min(rmin, s.r);
        rmax = std::max(rmax, s.r);
    }
    CHECK(rmax - rmin < 1e-6);
    CHECK(std::abs(phase_slope(series) + 1) < 1e-3);
}
