#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bugs/dynamics.hpp"
#include "bugs/random.hpp"
#include "bugs/steady_state.hpp"

namespace bugs::mc {

/// Bernoulli proportion with its CLT interval. Undetermined and groups
/// trials are counted but kept out of the proportion.
struct ProbabilityEstimate {
    double p_hat = 0.0;
    std::size_t m_trials = 0;
    std::size_t successes = 0;
    std::size_t classified = 0;
    double std_err = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::size_t undetermined_count = 0;
    std::size_t groups_count = 0;
    bool reliable = true;

    /// p_hat = successes / (successes + failures), sigma = sqrt(p(1-p)/M) with
    /// M the classified count; the interval p -+ 1.96 sigma is clamped to
    /// [0, 1]. Unreliable once undetermined trials exceed 1% of the total.
    static ProbabilityEstimate from_counts(std::size_t successes, std::size_t failures,
                                           std::size_t undetermined = 0, std::size_t groups = 0);

    bool covers(double p) const { return ci95_low <= p && p <= ci95_high; }

    friend bool operator==(const ProbabilityEstimate&, const ProbabilityEstimate&) = default;
};

/// theta_1 = 0, the others uniform on (0, 2pi).
BugConfiguration sample_initial(std::size_t n_bugs, SplitMix64& rng);

/// Runs `m_trials` uniform trials; trial t draws from stream (seed, n, t).
ProbabilityEstimate estimate_cycle_probability(std::size_t n_bugs, std::size_t m_trials,
                                               const SimParams& params, std::uint64_t seed,
                                               unsigned workers = 1);

struct StabilityPoint {
    double alpha = 0.0;
    ProbabilityEstimate estimate;
    double analytic = 0.0;
};

/// alpha_i = i pi / k for i = 1..k.
std::vector<double> alpha_grid(std::size_t k);

/// Three bugs at the groups point (pi, pi), each gap shifted by an
/// independent Uniform(-alpha, alpha); estimates P(cycle) per alpha.
std::vector<StabilityPoint> stability_experiment(std::span<const double> alphas, std::size_t m_trials,
                                                 const SimParams& params, std::uint64_t seed,
                                                 unsigned workers = 1);

struct SweepRow {
    std::size_t n_bugs = 0;
    /// Estimate of P(coalesce).
    ProbabilityEstimate estimate;
    std::uint64_t seed = 0;
    double dt = 0.0;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Simulation controls shared by every row of a sweep. An unset dt means
/// SimParams::for_bugs(N) per row.
struct SweepSettings {
    std::optional<double> dt;
    double t_max = 100.0;
    std::size_t check_every = 10;
    double coincidence_tol = kDefaultCoincidenceTol;

    SimParams params_for(std::size_t n_bugs) const;
};

/// One coalescence estimate per N; row N matches estimate_cycle_probability
/// with the same seed.
std::vector<SweepRow> sweep(std::span<const std::size_t> n_values, std::size_t m_trials,
                            const SweepSettings& settings, std::uint64_t seed, unsigned workers = 1);

/// P(coalesce) ~ prefactor * N^exponent.
struct PowerLawFit {
    double prefactor = 0.0;
    double exponent = 0.0;
    double rms_log_residual = 0.0;
    std::size_t rows_used = 0;

    double operator()(double n) const;

    friend bool operator==(const PowerLawFit&, const PowerLawFit&) = default;
};

/// Ordinary least squares of ln p on ln N. Needs at least three points with
/// positive p; throws std::invalid_argument otherwise.
PowerLawFit fit_power_law(std::span<const double> n_values, std::span<const double> probabilities);

/// Fits the sweep's coalescence estimates, skipping rows with p_hat = 0 or
/// an unreliable flag.
PowerLawFit fit_power_law(std::span<const SweepRow> rows);

}  // namespace bugs::mc
