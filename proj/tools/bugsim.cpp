// bugsim: command-line front end for the bugs-on-a-circle toolkit.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bugs/commands.hpp"
#include "bugs/io.hpp"

using namespace bugs::cli;

namespace {

void add_common(CLI::App* sub, CommonOptions& c, std::string& format, std::string& out_path)
{
    sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
    sub->add_option("--dt", c.dt, "Time step (default min(0.01, pi/(2N)); must satisfy dt < pi/N)");
    sub->add_option("--t-max", c.t_max, "Time after which a trial is undetermined")->capture_default_str();
    sub->add_option("--check-every", c.check_every, "Steps between classification checks")
        ->capture_default_str();
    sub->add_option("--workers", c.workers, "Worker threads; results do not depend on it")
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
}

std::optional<Format> to_format(const std::string& s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic pursuit of N bugs on the unit circle"};
    app.set_version_flag("--version", std::string(bugs::version()));
    app.require_subcommand(1);

    std::string format, out_path;

    SimulateOptions sim;
    std::string angles;
    auto* simulate = app.add_subcommand("simulate", "Run one trajectory and classify it");
    add_common(simulate, sim.common, format, out_path);
    auto* angles_opt = simulate->add_option("--angles", angles, "Initial angles in radians, comma separated");
    simulate->add_option("--n", sim.n_bugs, "Random initial state with N bugs")->excludes(angles_opt);
    simulate->add_option("--trajectory-stride", sim.trajectory_stride, "Record every k-th step");
    simulate->add_flag("--order-param", sim.order_param, "Emit the r, psi series");
    simulate->add_flag("--full", sim.full, "Continue until coalesced or for one revolution of a cycle");

    MonteCarloOptions mco;
    auto* montecarlo = app.add_subcommand("montecarlo", "Estimate the cycle probability for N bugs");
    add_common(montecarlo, mco.common, format, out_path);
    montecarlo->add_option("--n", mco.n_bugs, "Number of bugs")->required();
    montecarlo->add_option("--trials", mco.trials, "Number of trials M")->capture_default_str();

    StabilityOptions stab;
    auto* stability = app.add_subcommand("stability", "Three-bug perturbation stability curve");
    add_common(stability, stab.common, format, out_path);
    stability->add_option("--trials", stab.trials, "Trials per alpha")->capture_default_str();
    stability->add_option("--alphas", stab.n_alphas, "Number of alphas, uniform in (0, pi]")
        ->capture_default_str();

    SweepFitOptions swp;
    auto* sweep = app.add_subcommand("sweep-fit", "Coalescence probability over N and power-law fit");
    add_common(sweep, swp.common, format, out_path);
    sweep->add_option("--n-grid", swp.n_grid, "start:stop:step")->capture_default_str();
    sweep->add_option("--trials", swp.trials, "Trials per N")->capture_default_str();
    sweep->add_option("--synthetic", swp.synthetic, "Skip simulation; rows are a*N^p for 'a,p'");

    AnalyticOptions ana;
    auto* analytic = app.add_subcommand("analytic", "Closed-form values: p N | stab A | classify3 W1 W2 | "
                                                    "classify4 T2 T3 T4 | quad RES");
    add_common(analytic, ana.common, format, out_path);
    analytic->add_option("query", ana.query, "Query words")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version are "errors" with exit code 0
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto fmt = to_format(format);
        for (CommonOptions* c : {&sim.common, &mco.common, &stab.common, &swp.common, &ana.common}) c->format = fmt;

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
        }
        std::ostream& out = out_path.empty() ? std::cout : file;

        if (simulate->parsed()) {
            if (!angles.empty()) sim.angles = parse_angle_list(angles);
            return cmd_simulate(sim, out);
        }
        if (montecarlo->parsed()) return cmd_montecarlo(mco, out);
        if (stability->parsed()) return cmd_stability(stab, out);
        if (sweep->parsed()) return cmd_sweep_fit(swp, out);
        if (analytic->parsed()) return cmd_analytic(ana, out);
    } catch (const std::exception& e) {
        std::cerr << "bugsim: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
