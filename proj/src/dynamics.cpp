#include "bugs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bugs {

double wrap_angle(double radians)
{
    if (radians >= 0.0 && radians < kTwoPi) return radians;
    if (radians < 0.0 && radians >= -kTwoPi) {
        const double r = radians + kTwoPi;
        return r < kTwoPi ? r : 0.0;
    }
    if (radians >= kTwoPi && radians < 2.0 * kTwoPi) {
        const double r = radians - kTwoPi;
        return r < kTwoPi ? r : 0.0;
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double ccw_gap(double from, double to)
{
    return wrap_angle(to - from);
}

Direction direction(Angle self, Angle target, double tol)
{
    const double g = ccw_gap(self.value(), target.value());
    if (g < tol || g > kTwoPi - tol || std::abs(g - kPi) < tol) return Direction::stationary;
    return g < kPi ? Direction::counterclockwise : Direction::clockwise;
}

SimParams SimParams::for_bugs(std::size_t n_bugs)
{
    SimParams p;
    p.dt = std::min(0.01, kPi / (2.0 * static_cast<double>(std::max<std::size_t>(n_bugs, 1))));
    return p;
}

void SimParams::validate(std::size_t n_bugs) const
{
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const double limit = kPi / static_cast<double>(n_bugs);
    if (!(dt < limit)) {
        throw std::invalid_argument("dt = " + std::to_string(dt) + " violates dt < pi/N = " +
                                    std::to_string(limit) + " for N = " + std::to_string(n_bugs) +
                                    "; larger steps let a bug pass several others in one step");
    }
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
    if (check_every == 0) throw std::invalid_argument("check_every must be at least 1");
    if (!(coincidence_tol > 0.0) || !(coincidence_tol < dt)) {
        throw std::invalid_argument("coincidence_tol must lie in (0, dt)");
    }
}

BugConfiguration BugConfiguration::from_angles(std::span<const double> angles, double tol)
{
    if (angles.size() < 2) throw std::invalid_argument("at least two bugs are required");
    BugConfiguration c;
    c.angles_.reserve(angles.size());
    for (double a : angles) {
        if (!std::isfinite(a)) throw std::invalid_argument("angles must be finite");
        c.angles_.push_back(wrap_angle(a));
    }
    c.joined_.assign(angles.size(), 0);
    c.fuse_touching(tol);
    return c;
}

bool BugConfiguration::coalesced() const
{
    return std::all_of(joined_.begin(), joined_.end(), [](std::uint8_t v) { return v != 0; });
}

std::size_t BugConfiguration::cluster_count() const
{
    const auto open = static_cast<std::size_t>(std::count(joined_.begin(), joined_.end(), 0));
    return std::max<std::size_t>(open, 1);
}

std::vector<Cluster> BugConfiguration::clusters() const
{
    const std::size_t n = size();
    if (coalesced()) return {Cluster{0, n}};

    std::size_t head = 0;
    while (joined_[(head + n - 1) % n]) ++head;

    std::vector<Cluster> out;
    std::size_t visited = 0;
    std::size_t i = head;
    while (visited < n) {
        Cluster c{i, 1};
        while (joined_[(c.first + c.size - 1) % n]) ++c.size;
        visited += c.size;
        i = (c.first + c.size) % n;
        out.push_back(c);
    }
    return out;
}

BugConfiguration BugConfiguration::rotated(double radians) const
{
    BugConfiguration c = *this;
    for (double& a : c.angles_) a = wrap_angle(a + radians);
    return c;
}

void BugConfiguration::normalize_links()
{
    // A single open link means one run covers every bug: fully coalesced.
    if (std::count(joined_.begin(), joined_.end(), 0) == 1) {
        std::fill(joined_.begin(), joined_.end(), 1);
    }
}

void BugConfiguration::fuse_touching(double tol)
{
    const std::size_t n = size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (joined_[j]) continue;
            const double g = ccw_gap(angles_[j], angles_[(j + 1) % n]);
            if (g < tol || g > kTwoPi - tol) {
                joined_[j] = 1;
                changed = true;
            }
        }
        if (!changed) break;
        normalize_links();
        // members take the angle of the last member, the one being chased
        for (const Cluster& c : clusters()) {
            const double a = angles_[c.last(n)];
            for (std::size_t k = 0; k < c.size; ++k) angles_[(c.first + k) % n] = a;
        }
    }
}

namespace {

struct ClusterMotion {
    Cluster members;
    int velocity = 0;
};

std::vector<ClusterMotion> cluster_motions(const BugConfiguration& config, double tol)
{
    const std::size_t n = config.size();
    std::vector<ClusterMotion> out;
    for (const Cluster& c : config.clusters()) {
        const std::size_t last = c.last(n);
        const std::size_t next = (last + 1) % n;
        int v = 0;
        if (c.size < n) v = sign(direction(Angle(config.angle(last)), Angle(config.angle(next)), tol));
        out.push_back({c, v});
    }
    return out;
}

}  // namespace

std::vector<Direction> directions(const BugConfiguration& config, double tol)
{
    const std::size_t n = config.size();
    std::vector<Direction> out(n, Direction::stationary);
    for (const ClusterMotion& m : cluster_motions(config, tol)) {
        for (std::size_t k = 0; k < m.members.size; ++k) {
            out[(m.members.first + k) % n] = static_cast<Direction>(m.velocity);
        }
    }
    return out;
}

std::vector<double> gaps(const BugConfiguration& config)
{
    std::vector<double> out;
    out.reserve(config.size() - 1);
    for (std::size_t j = 0; j + 1 < config.size(); ++j) {
        out.push_back(ccw_gap(config.angle(j), config.angle(j + 1)));
    }
    return out;
}

std::vector<int> gap_rates(const BugConfiguration& config, double tol)
{
    const auto d = directions(config, tol);
    std::vector<int> out;
    out.reserve(d.size() - 1);
    for (std::size_t j = 0; j + 1 < d.size(); ++j) out.push_back(sign(d[j + 1]) - sign(d[j]));
    return out;
}

BugConfiguration step(const BugConfiguration& config, const SimParams& params)
{
    params.validate(config.size());
    BugConfiguration out = config;
    advance(out, params);
    return out;
}

void advance(BugConfiguration& out, const SimParams& params)
{
    const std::size_t n = out.size();
    double remaining = params.dt;
    while (remaining > 0.0 && !out.coalesced()) {
        const auto motions = cluster_motions(out, params.coincidence_tol);
        const std::size_t k_count = motions.size();

        // earliest time at which some cluster reaches the one it chases
        double first_meeting = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < k_count; ++k) {
            const ClusterMotion& chaser = motions[k];
            const ClusterMotion& chased = motions[(k + 1) % k_count];
            const double g = ccw_gap(out.angle(chaser.members.last(n)), out.angle(chased.members.first));
            const int closing = chased.velocity - chaser.velocity;
            double t = std::numeric_limits<double>::infinity();
            if (closing < 0) t = g / static_cast<double>(-closing);
            else if (closing > 0) t = (kTwoPi - g) / static_cast<double>(closing);
            first_meeting = std::min(first_meeting, t);
        }

        const double advance = std::min(first_meeting, remaining);
        for (const ClusterMotion& m : motions) {
            if (m.velocity == 0) continue;
            for (std::size_t k = 0; k < m.members.size; ++k) {
                double& a = out.angles_[(m.members.first + k) % n];
                a = wrap_angle(a + m.velocity * advance);
            }
        }
        remaining = first_meeting < remaining ? remaining - advance : 0.0;
        out.fuse_touching(params.coincidence_tol);
    }
}

}  // namespace bugs
