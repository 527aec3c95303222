#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bugs/dynamics.hpp"

namespace bugs {

enum class OutcomeKind { coalesce, cycle, groups, undetermined };

const char* to_string(OutcomeKind kind);
OutcomeKind outcome_kind_from_string(const std::string& s);

struct Outcome {
    OutcomeKind kind = OutcomeKind::undetermined;
    /// Present iff kind == cycle.
    std::optional<Direction> cycle_direction;

    static Outcome cycle(Direction d) { return {OutcomeKind::cycle, d}; }
    static Outcome of(OutcomeKind k) { return {k, std::nullopt}; }

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct TrajectorySample {
    double t = 0.0;
    BugConfiguration config;
};

struct TrialResult {
    Outcome outcome;
    double t_classified = 0.0;
    std::size_t steps = 0;
    std::optional<int> winding;
    /// Time of the last recorded state; equals t_classified for
    /// run_to_classification, later for run_full.
    double t_final = 0.0;
    std::vector<TrajectorySample> trajectory;
};

/// +1 or -1 when every bug moves that way (the cycle certificate).
std::optional<Direction> all_same_direction(const BugConfiguration& config,
                                            double tol = kDefaultCoincidenceTol);

/// True when all bugs fit in a closed half circle, i.e. the largest gap
/// between circularly sorted angles is at least pi. Certifies coalescence.
bool within_semicircle(const BugConfiguration& config, double tol = kDefaultCoincidenceTol);

/// Every gap is 0 or pi and at least one is pi: stationary antipodal groups.
bool is_groups(const BugConfiguration& config, double tol = kDefaultCoincidenceTol);

/// Precedence groups > cycle > coalesce > undetermined.
Outcome classify_now(const BugConfiguration& config, double tol = kDefaultCoincidenceTol);

/// Number of times the index order 1..N wraps the circle, counting gaps in
/// direction `along` (a clockwise cycle winds clockwise). Throws
/// std::invalid_argument if any two index-adjacent bugs coincide.
int winding_number(const BugConfiguration& config, Direction along = Direction::counterclockwise,
                   double tol = kDefaultCoincidenceTol);

/// Steps until classify_now reports something other than undetermined,
/// checking at t = 0 and then every params.check_every steps. Returns an
/// undetermined outcome if t_max is reached. A nonzero `stride` records
/// every stride-th step (plus the final state) in the trajectory.
TrialResult run_to_classification(const BugConfiguration& initial, const SimParams& params,
                                  std::size_t stride = 0);

/// Like run_to_classification but keeps going after classification: a
/// coalescing run continues until a single cluster remains, a cycling run
/// for one further revolution (2pi time units). The trajectory is always
/// recorded, every `stride` steps.
TrialResult run_full(const BugConfiguration& initial, const SimParams& params,
                     std::size_t stride = 1);

}  // namespace bugs
