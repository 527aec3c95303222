#include "bugs/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "bugs/analytic.hpp"

namespace bugs::mc {

ProbabilityEstimate ProbabilityEstimate::from_counts(std::size_t successes, std::size_t failures,
                                                     std::size_t undetermined, std::size_t groups)
{
    ProbabilityEstimate e;
    e.successes = successes;
    e.classified = successes + failures;
    e.undetermined_count = undetermined;
    e.groups_count = groups;
    e.m_trials = e.classified + undetermined + groups;
    if (e.classified > 0) {
        const auto m = static_cast<double>(e.classified);
        e.p_hat = static_cast<double>(successes) / m;
        e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / m);
    }
    e.ci95_low = std::clamp(e.p_hat - 1.96 * e.std_err, 0.0, 1.0);
    e.ci95_high = std::clamp(e.p_hat + 1.96 * e.std_err, 0.0, 1.0);
    e.reliable = e.classified > 0 && static_cast<double>(undetermined) <= 0.01 * static_cast<double>(e.m_trials);
    return e;
}

BugConfiguration sample_initial(std::size_t n_bugs, SplitMix64& rng)
{
    if (n_bugs < 2) throw std::invalid_argument("at least two bugs are required");
    std::vector<double> theta(n_bugs, 0.0);
    for (std::size_t j = 1; j < n_bugs; ++j) theta[j] = rng.uniform(0.0, kTwoPi);
    return BugConfiguration::from_angles(theta);
}

namespace {

// Runs trial(i) for i in [0, count) on `workers` threads; slot i of the
// result belongs to trial i, so the output is independent of scheduling.
std::vector<OutcomeKind> run_trials(std::size_t count, unsigned workers,
                                    const std::function<OutcomeKind(std::size_t)>& trial)
{
    std::vector<OutcomeKind> out(count, OutcomeKind::undetermined);
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = trial(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) out[i] = trial(i);
            });
        }
    }
    return out;
}

struct Tally {
    std::size_t coalesce = 0, cycle = 0, groups = 0, undetermined = 0;
};

Tally tally(const std::vector<OutcomeKind>& outcomes)
{
    Tally t;
    for (OutcomeKind k : outcomes) {
        switch (k) {
        case OutcomeKind::coalesce: ++t.coalesce; break;
        case OutcomeKind::cycle: ++t.cycle; break;
        case OutcomeKind::groups: ++t.groups; break;
        case OutcomeKind::undetermined: ++t.undetermined; break;
        }
    }
    return t;
}

Tally uniform_trials(std::size_t n_bugs, std::size_t m_trials, const SimParams& params,
                     std::uint64_t seed, unsigned workers)
{
    if (m_trials < 1) throw std::invalid_argument("at least one trial is required");
    params.validate(n_bugs);
    return tally(run_trials(m_trials, workers, [&](std::size_t t) {
        SplitMix64 rng = SplitMix64::stream(seed, {n_bugs, t});
        return run_to_classification(sample_initial(n_bugs, rng), params).outcome.kind;
    }));
}

}  // namespace

ProbabilityEstimate estimate_cycle_probability(std::size_t n_bugs, std::size_t m_trials,
                                               const SimParams& params, std::uint64_t seed,
                                               unsigned workers)
{
    const Tally t = uniform_trials(n_bugs, m_trials, params, seed, workers);
    return ProbabilityEstimate::from_counts(t.cycle, t.coalesce, t.undetermined, t.groups);
}

std::vector<double> alpha_grid(std::size_t k)
{
    if (k < 1) throw std::invalid_argument("need at least one alpha");
    std::vector<double> out;
    for (std::size_t i = 1; i <= k; ++i) out.push_back(kPi * static_cast<double>(i) / static_cast<double>(k));
    out.back() = kPi;
    return out;
}

std::vector<StabilityPoint> stability_experiment(std::span<const double> alphas, std::size_t m_trials,
                                                 const SimParams& params, std::uint64_t seed,
                                                 unsigned workers)
{
    if (m_trials < 1) throw std::invalid_argument("at least one trial is required");
    params.validate(3);
    std::vector<StabilityPoint> out;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        const double alpha = alphas[a];
        if (!(alpha > 0.0) || alpha > kPi) throw std::invalid_argument("alpha must lie in (0, pi]");
        const auto outcomes = run_trials(m_trials, workers, [&](std::size_t t) {
            SplitMix64 rng = SplitMix64::stream(seed, {3, a, t});
            for (;;) {
                const double w1 = kPi + rng.uniform(-alpha, alpha);
                const double w2 = kPi + rng.uniform(-alpha, alpha);
                const double theta[] = {0.0, w1, w1 + w2};
                const auto c = BugConfiguration::from_angles(theta, params.coincidence_tol);
                if (is_groups(c, params.coincidence_tol)) continue;
                return run_to_classification(c, params).outcome.kind;
            }
        });
        const Tally t = tally(outcomes);
        out.push_back({alpha, ProbabilityEstimate::from_counts(t.cycle, t.coalesce, t.undetermined, t.groups),
                       analytic::stability_probability_3(alpha)});
    }
    return out;
}

SimParams SweepSettings::params_for(std::size_t n_bugs) const
{
    SimParams p = SimParams::for_bugs(n_bugs);
    if (dt) p.dt = *dt;
    p.t_max = t_max;
    p.check_every = check_every;
    p.coincidence_tol = coincidence_tol;
    p.validate(n_bugs);
    return p;
}

std::vector<SweepRow> sweep(std::span<const std::size_t> n_values, std::size_t m_trials,
                            const SweepSettings& settings, std::uint64_t seed, unsigned workers)
{
    std::vector<SweepRow> rows;
    for (std::size_t n : n_values) {
        const SimParams params = settings.params_for(n);
        const Tally t = uniform_trials(n, m_trials, params, seed, workers);
        rows.push_back({n, ProbabilityEstimate::from_counts(t.coalesce, t.cycle, t.undetermined, t.groups),
                        seed, params.dt});
    }
    return rows;
}

double PowerLawFit::operator()(double n) const
{
    return prefactor * std::pow(n, exponent);
}

PowerLawFit fit_power_law(std::span<const double> n_values, std::span<const double> probabilities)
{
    if (n_values.size() != probabilities.size()) throw std::invalid_argument("size mismatch");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] > 0.0 && probabilities[i] > 0.0) {
            x.push_back(std::log(n_values[i]));
            y.push_back(std::log(probabilities[i]));
        }
    }
    if (x.size() < 3) throw std::invalid_argument("power-law fit needs at least three points with p > 0");

    const auto m = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("power-law fit needs at least two distinct N");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.prefactor = std::exp(intercept);
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + fit.exponent * x[i]);
        ss += r * r;
    }
    fit.rms_log_residual = std::sqrt(ss / m);
    fit.rows_used = x.size();
    return fit;
}

PowerLawFit fit_power_law(std::span<const SweepRow> rows)
{
    std::vector<double> n, p;
    for (const SweepRow& r : rows) {
        if (!r.estimate.reliable || r.estimate.p_hat <= 0.0) continue;
        n.push_back(static_cast<double>(r.n_bugs));
        p.push_back(r.estimate.p_hat);
    }
    return fit_power_law(n, p);
}

}  // namespace bugs::mc
