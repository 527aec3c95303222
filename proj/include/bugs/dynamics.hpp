#pragma once

// Cyclic pursuit on the unit circle: bug j moves at unit angular speed toward
// bug j+1 along the shorter arc, bug N chases bug 1. Index-adjacent bugs that
// meet fuse into a cluster; other coincidences pass through.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace bugs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDefaultCoincidenceTol = 1e-9;

/// Maps any finite angle into the principal branch [0, 2pi).
double wrap_angle(double radians);

/// Angle on the circle, always stored in [0, 2pi).
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : value_(wrap_angle(radians)) {}

    double value() const { return value_; }

private:
    double value_ = 0.0;
};

/// Angular velocity sign. The magnitude is fixed at one radian per time unit.
enum class Direction : int { clockwise = -1, stationary = 0, counterclockwise = 1 };

inline int sign(Direction d) { return static_cast<int>(d); }

/// Direction a bug at `self` takes when chasing a bug at `target`.
/// Gaps within `tol` of 0 or pi leave the bug stationary.
Direction direction(Angle self, Angle target, double tol = kDefaultCoincidenceTol);

/// Counterclockwise angular distance from `from` to `to`, in [0, 2pi).
double ccw_gap(double from, double to);

/// A maximal run of cyclically consecutive bugs sharing one angle.
/// `first` is 0-based; members are first, first+1, ... (mod N).
struct Cluster {
    std::size_t first = 0;
    std::size_t size = 1;

    std::size_t last(std::size_t n_bugs) const { return (first + size - 1) % n_bugs; }
};

/// Step size and stopping controls for a trajectory.
struct SimParams {
    double dt = 0.01;
    double t_max = 100.0;
    std::size_t check_every = 10;
    double coincidence_tol = kDefaultCoincidenceTol;

    /// Defaults for N bugs: dt = min(0.01, pi / (2N)).
    static SimParams for_bugs(std::size_t n_bugs);

    /// Throws std::invalid_argument unless dt < pi/N, tol < dt and the
    /// remaining fields are positive.
    void validate(std::size_t n_bugs) const;
};

/// The system state: N angles plus the cluster partition.
///
/// The partition is stored as one link flag per bug: `joined_[j]` says bug j
/// and bug j+1 (mod N) belong to the same cluster. A fully coalesced state
/// has every link set.
class BugConfiguration {
public:
    /// Wraps angles into [0, 2pi) and fuses index-adjacent bugs whose angles
    /// agree within `tol`. Throws std::invalid_argument for fewer than two
    /// bugs or non-finite input.
    static BugConfiguration from_angles(std::span<const double> angles,
                                        double tol = kDefaultCoincidenceTol);

    std::size_t size() const { return angles_.size(); }
    std::span<const double> angles() const { return angles_; }
    double angle(std::size_t j) const { return angles_[j]; }

    bool joined_to_next(std::size_t j) const { return joined_[j] != 0; }
    bool coalesced() const;
    std::size_t cluster_count() const;
    std::vector<Cluster> clusters() const;

    /// Rigid rotation of every bug; the partition is unchanged.
    BugConfiguration rotated(double radians) const;

    friend bool operator==(const BugConfiguration&, const BugConfiguration&) = default;

private:
    friend void advance(BugConfiguration&, const SimParams&);

    BugConfiguration() = default;
    void fuse_touching(double tol);
    void normalize_links();

    std::vector<double> angles_;
    std::vector<std::uint8_t> joined_;
};

/// Per-bug direction. Members of a cluster share the direction of the
/// cluster, which chases the first bug after its last member.
std::vector<Direction> directions(const BugConfiguration& config,
                                  double tol = kDefaultCoincidenceTol);

/// Gaps w_j = mod(theta_{j+1} - theta_j, 2pi) for j = 1..N-1.
std::vector<double> gaps(const BugConfiguration& config);

/// Rate of change of each gap, d_{j+1} - d_j with cluster-aware directions.
/// Away from exact antipodal gaps the values lie in {-2, 0, +2}.
std::vector<int> gap_rates(const BugConfiguration& config, double tol = kDefaultCoincidenceTol);

/// Advances the configuration by one time step of size params.dt.
///
/// Every cluster moves by dt in its direction. When a cluster reaches the
/// bug it chases inside the step, the two fuse at the meeting instant and
/// travel together for the remainder of the step, so the chaser ends on the
/// chased bug's end-of-step angle. Meetings inside one step are resolved in
/// time order. Throws std::invalid_argument if params are invalid for N.
BugConfiguration step(const BugConfiguration& config, const SimParams& params);

/// In-place step without parameter validation, for drivers that validated
/// once up front.
void advance(BugConfiguration& config, const SimParams& params);

}  // namespace bugs
