#include "bugs/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bugs {

const char* to_string(OutcomeKind kind)
{
    switch (kind) {
    case OutcomeKind::coalesce: return "coalesce";
    case OutcomeKind::cycle: return "cycle";
    case OutcomeKind::groups: return "groups";
    case OutcomeKind::undetermined: return "undetermined";
    }
    return "undetermined";
}

OutcomeKind outcome_kind_from_string(const std::string& s)
{
    for (auto k : {OutcomeKind::coalesce, OutcomeKind::cycle, OutcomeKind::groups,
                   OutcomeKind::undetermined}) {
        if (s == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

std::optional<Direction> all_same_direction(const BugConfiguration& config, double tol)
{
    const auto d = directions(config, tol);
    const Direction first = d.front();
    if (first == Direction::stationary) return std::nullopt;
    if (std::all_of(d.begin(), d.end(), [first](Direction x) { return x == first; })) return first;
    return std::nullopt;
}

bool within_semicircle(const BugConfiguration& config, double tol)
{
    std::vector<double> sorted(config.angles().begin(), config.angles().end());
    std::sort(sorted.begin(), sorted.end());
    double largest = kTwoPi - sorted.back() + sorted.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) largest = std::max(largest, sorted[i] - sorted[i - 1]);
    return largest >= kPi - tol;
}

bool is_groups(const BugConfiguration& config, double tol)
{
    const std::size_t n = config.size();
    bool any_antipodal = false;
    for (std::size_t j = 0; j < n; ++j) {
        const double g = ccw_gap(config.angle(j), config.angle((j + 1) % n));
        const bool zero = g < tol || g > kTwoPi - tol;
        const bool antipodal = std::abs(g - kPi) < tol;
        if (!zero && !antipodal) return false;
        any_antipodal = any_antipodal || antipodal;
    }
    return any_antipodal;
}

Outcome classify_now(const BugConfiguration& config, double tol)
{
    if (is_groups(config, tol)) return Outcome::of(OutcomeKind::groups);
    if (auto d = all_same_direction(config, tol)) return Outcome::cycle(*d);
    if (within_semicircle(config, tol)) return Outcome::of(OutcomeKind::coalesce);
    return Outcome::of(OutcomeKind::undetermined);
}

namespace {

// Sum of the gaps from each bug to its target, measured in direction `along`.
double gap_sum(const BugConfiguration& config, Direction along)
{
    const std::size_t n = config.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double a = config.angle(j), b = config.angle((j + 1) % n);
        sum += along == Direction::clockwise ? ccw_gap(b, a) : ccw_gap(a, b);
    }
    return sum;
}

// Winding over clusters: fused bugs contribute exact zero gaps.
int cluster_winding(const BugConfiguration& config, Direction along)
{
    return static_cast<int>(std::lround(gap_sum(config, along) / kTwoPi));
}

}  // namespace

int winding_number(const BugConfiguration& config, Direction along, double tol)
{
    const std::size_t n = config.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double g = ccw_gap(config.angle(j), config.angle((j + 1) % n));
        if (g < tol || g > kTwoPi - tol) {
            throw std::invalid_argument("winding number needs distinct adjacent bugs; bugs " +
                                        std::to_string(j + 1) + " and " +
                                        std::to_string((j + 1) % n + 1) + " coincide");
        }
    }
    return cluster_winding(config, along);
}

namespace {

class Recorder {
public:
    Recorder(TrialResult& result, std::size_t stride) : result_(result), stride_(stride) {}

    void maybe_record(std::size_t steps, double t, const BugConfiguration& c)
    {
        if (stride_ == 0 || steps % stride_ != 0) return;
        result_.trajectory.push_back({t, c});
        last_ = steps;
    }

    void finish(std::size_t steps, double t, const BugConfiguration& c)
    {
        if (stride_ == 0 || last_ == steps) return;
        result_.trajectory.push_back({t, c});
        last_ = steps;
    }

private:
    TrialResult& result_;
    std::size_t stride_;
    std::size_t last_ = static_cast<std::size_t>(-1);
};

std::size_t step_budget(const SimParams& p)
{
    return static_cast<std::size_t>(std::floor(p.t_max / p.dt + 1e-9));
}

// Shared driver; leaves `config` at the classified (or timed-out) state.
void classify_trajectory(BugConfiguration& config, const SimParams& params, Recorder& rec,
                         TrialResult& result)
{
    const std::size_t max_steps = step_budget(params);
    std::size_t steps = 0;
    rec.maybe_record(0, 0.0, config);
    for (;;) {
        if (steps % params.check_every == 0 || steps == max_steps) {
            const Outcome o = classify_now(config, params.coincidence_tol);
            if (o.kind != OutcomeKind::undetermined) {
                result.outcome = o;
                break;
            }
        }
        if (steps >= max_steps) {
            result.outcome = Outcome::of(OutcomeKind::undetermined);
            break;
        }
        advance(config, params);
        ++steps;
        rec.maybe_record(steps, static_cast<double>(steps) * params.dt, config);
    }
    result.steps = steps;
    result.t_classified = static_cast<double>(steps) * params.dt;
    result.t_final = result.t_classified;
    if (result.outcome.kind == OutcomeKind::cycle) result.winding = cluster_winding(config, *result.outcome.cycle_direction);
}

}  // namespace

TrialResult run_to_classification(const BugConfiguration& initial, const SimParams& params,
                                  std::size_t stride)
{
    params.validate(initial.size());
    TrialResult result;
    Recorder rec(result, stride);
    BugConfiguration config = initial;
    classify_trajectory(config, params, rec, result);
    rec.finish(result.steps, result.t_final, config);
    return result;
}

TrialResult run_full(const BugConfiguration& initial, const SimParams& params, std::size_t stride)
{
    params.validate(initial.size());
    if (stride == 0) stride = 1;
    TrialResult result;
    Recorder rec(result, stride);
    BugConfiguration config = initial;
    classify_trajectory(config, params, rec, result);

    std::size_t steps = result.steps;
    if (result.outcome.kind == OutcomeKind::coalesce) {
        const std::size_t max_steps = step_budget(params);
        while (!config.coalesced() && steps < max_steps) {
            advance(config, params);
            ++steps;
            rec.maybe_record(steps, static_cast<double>(steps) * params.dt, config);
        }
    } else if (result.outcome.kind == OutcomeKind::cycle) {
        const auto revolution = static_cast<std::size_t>(std::ceil(kTwoPi / params.dt));
        for (std::size_t i = 0; i < revolution; ++i) {
            advance(config, params);
            ++steps;
            rec.maybe_record(steps, static_cast<double>(steps) * params.dt, config);
        }
    }
    result.t_final = static_cast<double>(steps) * params.dt;
    rec.finish(steps, result.t_final, config);
    return result;
}

}  // namespace bugs
