#include "bugs/commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "bugs/analytic.hpp"
#include "bugs/io.hpp"
#include "bugs/monte_carlo.hpp"
#include "bugs/order_param.hpp"
#include "bugs/steady_state.hpp"

namespace bugs::cli {

using json = nlohmann::ordered_json;

namespace {

double parse_real(const std::string& token)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not a number: '" + token + "'");
    return v;
}

std::size_t parse_count(const std::string& token)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a non-negative integer: '" + token + "'");
    }
    if (used != token.size() || token.front() == '-') {
        throw std::invalid_argument("not a non-negative integer: '" + token + "'");
    }
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

SimParams params_for(const CommonOptions& c, std::size_t n_bugs)
{
    SimParams p = SimParams::for_bugs(n_bugs);
    if (c.dt) p.dt = *c.dt;
    p.t_max = c.t_max;
    p.check_every = c.check_every;
    p.validate(n_bugs);
    return p;
}

Provenance provenance(const std::string& command, const CommonOptions& c, const SimParams* p)
{
    Provenance prov;
    prov.command = command;
    prov.seed = c.seed;
    if (p) prov.dt = p->dt;
    else prov.dt = c.dt;
    prov.t_max = c.t_max;
    prov.check_every = c.check_every;
    return prov;
}

void write_json(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

}  // namespace

std::vector<double> parse_angle_list(const std::string& s)
{
    std::vector<double> out;
    for (const std::string& tok : split(s, ',')) out.push_back(parse_real(tok));
    if (out.size() < 2) throw std::invalid_argument("need at least two angles");
    return out;
}

std::vector<std::size_t> parse_n_grid(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw std::invalid_argument("N grid must look like start:stop:step");
    const std::size_t start = parse_count(parts[0]);
    const std::size_t stop = parse_count(parts[1]);
    const std::size_t stride = parse_count(parts[2]);
    if (start < 2 || stop < start || stride == 0) {
        throw std::invalid_argument("N grid needs 2 <= start <= stop and step >= 1");
    }
    std::vector<std::size_t> out;
    for (std::size_t n = start; n <= stop; n += stride) out.push_back(n);
    return out;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out)
{
    if (opt.angles.empty() == !opt.n_bugs.has_value()) {
        throw std::invalid_argument("simulate needs exactly one of --angles or --n");
    }
    const Format format = opt.common.format.value_or(Format::json);

    std::optional<BugConfiguration> initial;
    if (opt.n_bugs) {
        if (*opt.n_bugs < 2) throw std::invalid_argument("at least two bugs are required");
        // same stream as trial 0 of `montecarlo` with this seed
        SplitMix64 rng = SplitMix64::stream(opt.common.seed, {*opt.n_bugs, 0});
        initial = mc::sample_initial(*opt.n_bugs, rng);
    } else {
        initial = BugConfiguration::from_angles(opt.angles);
    }
    const SimParams params = params_for(opt.common, initial->size());

    std::size_t stride = opt.trajectory_stride;
    if (stride == 0 && (opt.order_param || format == Format::csv)) stride = params.check_every;
    const TrialResult result =
        opt.full ? run_full(*initial, params, stride) : run_to_classification(*initial, params, stride);

    Provenance prov = provenance("simulate", opt.common, &params);
    prov.extra.emplace_back("n_bugs", std::to_string(initial->size()));
    prov.extra.emplace_back("mode", opt.full ? "full" : "classify");
    prov.extra.emplace_back("trajectory_stride", std::to_string(stride));

    if (format == Format::csv) {
        write_provenance_comments(out, prov);
        out << "# outcome=" << to_string(result.outcome.kind) << '\n';
        if (result.outcome.cycle_direction) out << "# direction=" << sign(*result.outcome.cycle_direction) << '\n';
        out << "# t_classified=" << format_real(result.t_classified) << '\n';
        out << "# steps=" << result.steps << '\n';
        if (result.winding) out << "# winding=" << *result.winding << '\n';
        if (opt.order_param) write_order_parameter_csv(out, track(result.trajectory));
        else write_trajectory_csv(out, result.trajectory);
    } else {
        json j;
        j["provenance"] = prov;
        j["initial"] = *initial;
        j["result"] = result;
        if (opt.order_param) {
            json series = json::array();
            for (const OrderParameterSample& s : track(result.trajectory)) series.push_back(s);
            j["order_parameter"] = std::move(series);
        }
        write_json(out, j);
    }
    return result.outcome.kind == OutcomeKind::undetermined ? kExitUndetermined : kExitOk;
}

int cmd_montecarlo(const MonteCarloOptions& opt, std::ostream& out)
{
    const SimParams params = params_for(opt.common, opt.n_bugs);
    const mc::ProbabilityEstimate cycle =
        mc::estimate_cycle_probability(opt.n_bugs, opt.trials, params, opt.common.seed, opt.common.workers);

    Provenance prov = provenance("montecarlo", opt.common, &params);
    prov.m_trials = opt.trials;
    prov.extra.emplace_back("n_bugs", std::to_string(opt.n_bugs));

    if (opt.common.format.value_or(Format::json) == Format::csv) {
        write_provenance_comments(out, prov);
        write_montecarlo_csv(out, opt.n_bugs, params.dt, cycle);
    } else {
        json j;
        j["provenance"] = prov;
        j["n_bugs"] = opt.n_bugs;
        j["cycle"] = cycle;
        j["coalesce"] = complement(cycle);
        write_json(out, j);
    }
    return kExitOk;
}

int cmd_stability(const StabilityOptions& opt, std::ostream& out)
{
    const SimParams params = params_for(opt.common, 3);
    const std::vector<double> alphas = opt.alphas.empty() ? mc::alpha_grid(opt.n_alphas) : opt.alphas;
    const auto points = mc::stability_experiment(alphas, opt.trials, params, opt.common.seed, opt.common.workers);

    std::size_t covered = 0;
    for (const auto& p : points) covered += p.estimate.covers(p.analytic) ? 1 : 0;

    Provenance prov = provenance("stability", opt.common, &params);
    prov.m_trials = opt.trials;
    prov.extra.emplace_back("n_alphas", std::to_string(alphas.size()));

    if (opt.common.format.value_or(Format::csv) == Format::json) {
        json j;
        j["provenance"] = prov;
        json arr = json::array();
        for (const auto& p : points) arr.push_back(p);
        j["points"] = std::move(arr);
        j["covered"] = covered;
        j["total"] = points.size();
        write_json(out, j);
    } else {
        write_provenance_comments(out, prov);
        write_stability_csv(out, points);
        out << "# covered=" << covered << '/' << points.size() << '\n';
    }
    return kExitOk;
}

int cmd_sweep_fit(const SweepFitOptions& opt, std::ostream& out)
{
    const std::vector<std::size_t> grid = parse_n_grid(opt.n_grid);
    mc::SweepSettings settings;
    settings.dt = opt.common.dt;
    settings.t_max = opt.common.t_max;
    settings.check_every = opt.common.check_every;

    std::vector<mc::SweepRow> rows;
    if (opt.synthetic) {
        const auto parts = split(*opt.synthetic, ',');
        if (parts.size() != 2) throw std::invalid_argument("--synthetic expects 'prefactor,exponent'");
        const double ap[] = {parse_real(parts[0]), parse_real(parts[1])};
        if (!(ap[0] > 0.0)) throw std::invalid_argument("synthetic prefactor must be positive");
        for (std::size_t n : grid) {
            mc::ProbabilityEstimate e;
            e.p_hat = ap[0] * std::pow(static_cast<double>(n), ap[1]);
            e.ci95_low = e.ci95_high = e.p_hat;
            rows.push_back({n, e, opt.common.seed, settings.params_for(n).dt});
        }
    } else {
        rows = mc::sweep(grid, opt.trials, settings, opt.common.seed, opt.common.workers);
    }

    std::optional<mc::PowerLawFit> fit;
    std::string fit_error;
    try {
        fit = mc::fit_power_law(rows);
    } catch (const std::invalid_argument& e) {
        fit_error = e.what();
    }

    Provenance prov = provenance("sweep-fit", opt.common, nullptr);
    prov.m_trials = opt.trials;
    prov.extra.emplace_back("n_grid", opt.n_grid);
    if (opt.synthetic) prov.extra.emplace_back("synthetic", *opt.synthetic);

    if (opt.common.format.value_or(Format::csv) == Format::json) {
        json j;
        j["provenance"] = prov;
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(r);
        j["rows"] = std::move(arr);
        j["fit"] = fit ? json(*fit) : json(nullptr);
        if (!fit) j["fit_error"] = fit_error;
        write_json(out, j);
    } else {
        write_provenance_comments(out, prov);
        write_sweep_csv(out, rows);
        if (fit) write_fit_comments(out, *fit);
        else out << "# fit_error=" << fit_error << '\n';
    }
    return kExitOk;
}

int cmd_analytic(const AnalyticOptions& opt, std::ostream& out)
{
    const auto& q = opt.query;
    if (q.empty()) throw std::invalid_argument("analytic needs a query: p | stab | classify3 | classify4 | quad");
    const auto want = [&](std::size_t args) {
        if (q.size() != args + 1) {
            throw std::invalid_argument("'" + q[0] + "' takes " + std::to_string(args) + " argument(s)");
        }
    };

    std::string text;
    json j;
    j["query"] = q;
    if (q[0] == "p") {
        want(1);
        const auto p = analytic::exact_cycle_probability(static_cast<int>(parse_count(q[1])));
        text = p.to_string() + " = " + format_real(p.value());
        j["exact"] = p.to_string();
        j["value"] = p.value();
    } else if (q[0] == "stab") {
        want(1);
        const double v = analytic::stability_probability_3(parse_real(q[1]));
        text = fmt::format("{:.5f}", v);
        j["value"] = v;
    } else if (q[0] == "classify3") {
        want(2);
        text = analytic::to_string(analytic::classify_3(parse_real(q[1]), parse_real(q[2])));
        j["region"] = text;
    } else if (q[0] == "classify4") {
        want(3);
        text = analytic::to_string(analytic::classify_4(parse_real(q[1]), parse_real(q[2]), parse_real(q[3])));
        j["outcome"] = text;
    } else if (q[0] == "quad") {
        want(1);
        const int res = static_cast<int>(parse_count(q[1]));
        const double full = analytic::four_bug_probability_by_quadrature(res);
        const double half = analytic::four_bug_half_integral(res);
        text = format_real(full) + " (half " + format_real(half) + ")";
        j["value"] = full;
        j["half_integral"] = half;
    } else {
        throw std::invalid_argument("unknown analytic query '" + q[0] + "'");
    }

    if (opt.common.format.value_or(Format::text) == Format::json) write_json(out, j);
    else out << text << '\n';
    return kExitOk;
}

}  // namespace bugs::cli
