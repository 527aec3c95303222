#include "bugs/io.hpp"

#include <stdexcept>

#include <fmt/format.h>

#ifndef BUGS_VERSION
#define BUGS_VERSION "0.0.0"
#endif

namespace bugs {

using json = nlohmann::ordered_json;

const char* version() { return BUGS_VERSION; }

std::string format_real(double x)
{
    return fmt::format("{:.12g}", x);
}

void write_provenance_comments(std::ostream& os, const Provenance& p)
{
    os << "# tool=bugsim\n";
    os << "# version=" << version() << '\n';
    os << "# command=" << p.command << '\n';
    os << "# seed=" << p.seed << '\n';
    os << "# dt=" << (p.dt ? format_real(*p.dt) : std::string("auto")) << '\n';
    os << "# t_max=" << format_real(p.t_max) << '\n';
    os << "# check_every=" << p.check_every << '\n';
    if (p.m_trials) os << "# m_trials=" << *p.m_trials << '\n';
    for (const auto& [k, v] : p.extra) os << "# " << k << '=' << v << '\n';
}

void write_trajectory_csv(std::ostream& os, std::span<const TrajectorySample> trajectory)
{
    const std::size_t n = trajectory.empty() ? 0 : trajectory.front().config.size();
    os << 't';
    for (std::size_t j = 1; j <= n; ++j) os << ",theta_" << j;
    os << '\n';
    for (const TrajectorySample& s : trajectory) {
        os << format_real(s.t);
        for (double a : s.config.angles()) os << ',' << format_real(a);
        os << '\n';
    }
}

void write_order_parameter_csv(std::ostream& os, std::span<const OrderParameterSample> samples)
{
    os << "t,r,psi,psi_defined\n";
    for (const OrderParameterSample& s : samples) {
        os << format_real(s.t) << ',' << format_real(s.r) << ',' << format_real(s.psi) << ','
           << (s.psi_defined ? 1 : 0) << '\n';
    }
}

void write_stability_csv(std::ostream& os, std::span<const mc::StabilityPoint> points)
{
    os << "alpha,p_hat,std_err,ci_low,ci_high,analytic,covers,m_trials,undetermined\n";
    for (const mc::StabilityPoint& p : points) {
        const auto& e = p.estimate;
        os << format_real(p.alpha) << ',' << format_real(e.p_hat) << ',' << format_real(e.std_err) << ','
           << format_real(e.ci95_low) << ',' << format_real(e.ci95_high) << ',' << format_real(p.analytic)
           << ',' << (e.covers(p.analytic) ? 1 : 0) << ',' << e.m_trials << ',' << e.undetermined_count
           << '\n';
    }
}

void write_sweep_csv(std::ostream& os, std::span<const mc::SweepRow> rows)
{
    os << "n_bugs,dt,p_coalesce,std_err,ci_low,ci_high,m_trials,undetermined,reliable\n";
    for (const mc::SweepRow& r : rows) {
        const auto& e = r.estimate;
        os << r.n_bugs << ',' << format_real(r.dt) << ',' << format_real(e.p_hat) << ','
           << format_real(e.std_err) << ',' << format_real(e.ci95_low) << ',' << format_real(e.ci95_high)
           << ',' << e.m_trials << ',' << e.undetermined_count << ',' << (e.reliable ? 1 : 0) << '\n';
    }
}

void write_fit_comments(std::ostream& os, const mc::PowerLawFit& fit)
{
    os << "# fit_prefactor=" << format_real(fit.prefactor) << '\n';
    os << "# fit_exponent=" << format_real(fit.exponent) << '\n';
    os << "# fit_rms_log_residual=" << format_real(fit.rms_log_residual) << '\n';
    os << "# fit_rows_used=" << fit.rows_used << '\n';
}

mc::ProbabilityEstimate complement(const mc::ProbabilityEstimate& e)
{
    return mc::ProbabilityEstimate::from_counts(e.classified - e.successes, e.successes,
                                                e.undetermined_count, e.groups_count);
}

void write_montecarlo_csv(std::ostream& os, std::size_t n_bugs, double dt, const mc::ProbabilityEstimate& cycle)
{
    const mc::ProbabilityEstimate coal = complement(cycle);
    os << "n_bugs,dt,m_trials,classified,undetermined,p_cycle,cycle_ci_low,cycle_ci_high,"
          "p_coalesce,coalesce_ci_low,coalesce_ci_high,std_err,reliable\n";
    os << n_bugs << ',' << format_real(dt) << ',' << cycle.m_trials << ',' << cycle.classified << ','
       << cycle.undetermined_count << ',' << format_real(cycle.p_hat) << ',' << format_real(cycle.ci95_low)
       << ',' << format_real(cycle.ci95_high) << ',' << format_real(coal.p_hat) << ','
       << format_real(coal.ci95_low) << ',' << format_real(coal.ci95_high) << ','
       << format_real(cycle.std_err) << ',' << (cycle.reliable ? 1 : 0) << '\n';
}

void to_json(json& j, const Provenance& p)
{
    j = json{{"tool", "bugsim"}, {"version", version()}, {"command", p.command}, {"seed", p.seed}};
    j["dt"] = p.dt ? json(*p.dt) : json("auto");
    j["t_max"] = p.t_max;
    j["check_every"] = p.check_every;
    if (p.m_trials) j["m_trials"] = *p.m_trials;
    for (const auto& [k, v] : p.extra) j[k] = v;
}

void to_json(json& j, const Outcome& o)
{
    j = json{{"kind", to_string(o.kind)}};
    if (o.cycle_direction) j["direction"] = sign(*o.cycle_direction);
}

void from_json(const json& j, Outcome& o)
{
    o.kind = outcome_kind_from_string(j.at("kind").get<std::string>());
    o.cycle_direction.reset();
    if (j.contains("direction")) o.cycle_direction = static_cast<Direction>(j.at("direction").get<int>());
    if ((o.kind == OutcomeKind::cycle) != o.cycle_direction.has_value()) {
        throw std::invalid_argument("cycle outcomes, and only they, carry a direction");
    }
}

void to_json(json& j, const BugConfiguration& c)
{
    json clusters = json::array();
    for (const Cluster& cl : c.clusters()) {
        json members = json::array();
        for (std::size_t k = 0; k < cl.size; ++k) members.push_back((cl.first + k) % c.size() + 1);
        clusters.push_back(std::move(members));
    }
    j = json{{"theta", std::vector<double>(c.angles().begin(), c.angles().end())},
             {"clusters", std::move(clusters)}};
}

BugConfiguration configuration_from_json(const json& j)
{
    const auto theta = j.at("theta").get<std::vector<double>>();
    BugConfiguration c = BugConfiguration::from_angles(theta);
    if (j.contains("clusters")) {
        json expected;
        to_json(expected, c);
        if (expected.at("clusters") != j.at("clusters")) {
            throw std::invalid_argument("cluster lists do not match the angles");
        }
    }
    return c;
}

void to_json(json& j, const TrajectorySample& s)
{
    json config;
    to_json(config, s.config);
    j = json{{"t", s.t}, {"config", std::move(config)}};
}

void to_json(json& j, const TrialResult& r)
{
    j = json{{"outcome", r.outcome}, {"t_classified", r.t_classified}, {"steps", r.steps}};
    j["winding"] = r.winding ? json(*r.winding) : json(nullptr);
    j["t_final"] = r.t_final;
    if (!r.trajectory.empty()) {
        json traj = json::array();
        for (const TrajectorySample& s : r.trajectory) traj.push_back(s);
        j["trajectory"] = std::move(traj);
    }
}

void from_json(const json& j, TrialResult& r)
{
    r.outcome = j.at("outcome").get<Outcome>();
    r.t_classified = j.at("t_classified").get<double>();
    r.steps = j.at("steps").get<std::size_t>();
    r.winding.reset();
    if (!j.at("winding").is_null()) r.winding = j.at("winding").get<int>();
    r.t_final = j.at("t_final").get<double>();
    r.trajectory.clear();
    if (j.contains("trajectory")) {
        for (const json& s : j.at("trajectory")) {
            r.trajectory.push_back({s.at("t").get<double>(), configuration_from_json(s.at("config"))});
        }
    }
}

void to_json(json& j, const OrderParameterSample& s)
{
    j = json{{"t", s.t}, {"r", s.r}, {"psi", s.psi}, {"psi_defined", s.psi_defined}};
}

void from_json(const json& j, OrderParameterSample& s)
{
    s.t = j.at("t").get<double>();
    s.r = j.at("r").get<double>();
    s.psi = j.at("psi").get<double>();
    s.psi_defined = j.at("psi_defined").get<bool>();
}

namespace mc {

void to_json(json& j, const ProbabilityEstimate& e)
{
    j = json{{"p_hat", e.p_hat},
             {"m_trials", e.m_trials},
             {"successes", e.successes},
             {"classified", e.classified},
             {"std_err", e.std_err},
             {"ci95_low", e.ci95_low},
             {"ci95_high", e.ci95_high},
             {"undetermined_count", e.undetermined_count},
             {"groups_count", e.groups_count},
             {"reliable", e.reliable}};
}

void from_json(const json& j, ProbabilityEstimate& e)
{
    e.p_hat = j.at("p_hat").get<double>();
    e.m_trials = j.at("m_trials").get<std::size_t>();
    e.successes = j.at("successes").get<std::size_t>();
    e.classified = j.at("classified").get<std::size_t>();
    e.std_err = j.at("std_err").get<double>();
    e.ci95_low = j.at("ci95_low").get<double>();
    e.ci95_high = j.at("ci95_high").get<double>();
    e.undetermined_count = j.at("undetermined_count").get<std::size_t>();
    e.groups_count = j.at("groups_count").get<std::size_t>();
    e.reliable = j.at("reliable").get<bool>();
}

void to_json(json& j, const StabilityPoint& p)
{
    j = json{{"alpha", p.alpha}, {"estimate", p.estimate}, {"analytic", p.analytic}};
}

void from_json(const json& j, StabilityPoint& p)
{
    p.alpha = j.at("alpha").get<double>();
    p.estimate = j.at("estimate").get<ProbabilityEstimate>();
    p.analytic = j.at("analytic").get<double>();
}

void to_json(json& j, const SweepRow& r)
{
    j = json{{"n_bugs", r.n_bugs}, {"dt", r.dt}, {"seed", r.seed}, {"coalesce", r.estimate}};
}

void from_json(const json& j, SweepRow& r)
{
    r.n_bugs = j.at("n_bugs").get<std::size_t>();
    r.dt = j.at("dt").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.estimate = j.at("coalesce").get<ProbabilityEstimate>();
}

void to_json(json& j, const PowerLawFit& f)
{
    j = json{{"prefactor", f.prefactor},
             {"exponent", f.exponent},
             {"rms_log_residual", f.rms_log_residual},
             {"rows_used", f.rows_used}};
}

void from_json(const json& j, PowerLawFit& f)
{
    f.prefactor = j.at("prefactor").get<double>();
    f.exponent = j.at("exponent").get<double>();
    f.rms_log_residual = j.at("rms_log_residual").get<double>();
    f.rows_used = j.at("rows_used").get<std::size_t>();
}

}  // namespace mc

}  // namespace bugs
