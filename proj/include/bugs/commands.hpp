#pragma once

// Subcommands of the bugsim tool. Each writes its complete output to the
// given stream and returns the process exit code.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bugs::cli {

enum class Format { csv, json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndetermined = 2;

struct CommonOptions {
    std::uint64_t seed = 1;
    std::optional<double> dt;
    double t_max = 100.0;
    std::size_t check_every = 10;
    unsigned workers = 1;
    std::optional<Format> format;
};

struct SimulateOptions {
    CommonOptions common;
    std::vector<double> angles;
    std::optional<std::size_t> n_bugs;
    std::size_t trajectory_stride = 0;
    bool order_param = false;
    /// Continue past classification (run_full).
    bool full = false;
};

struct MonteCarloOptions {
    CommonOptions common;
    std::size_t n_bugs = 4;
    std::size_t trials = 10000;
};

struct StabilityOptions {
    CommonOptions common;
    std::size_t trials = 10000;
    std::size_t n_alphas = 20;
    std::vector<double> alphas;  // overrides n_alphas when non-empty
};

struct SweepFitOptions {
    CommonOptions common;
    std::string n_grid = "2:100:2";
    std::size_t trials = 10000;
    /// "a,p": rows are a * N^p exactly instead of simulated.
    std::optional<std::string> synthetic;
};

struct AnalyticOptions {
    CommonOptions common;
    std::vector<std::string> query;
};

/// "a,b,c" in radians.
std::vector<double> parse_angle_list(const std::string& s);

/// "start:stop:step", inclusive of stop when reached.
std::vector<std::size_t> parse_n_grid(const std::string& s);

int cmd_simulate(const SimulateOptions& opt, std::ostream& out);
int cmd_montecarlo(const MonteCarloOptions& opt, std::ostream& out);
int cmd_stability(const StabilityOptions& opt, std::ostream& out);
int cmd_sweep_fit(const SweepFitOptions& opt, std::ostream& out);
int cmd_analytic(const AnalyticOptions& opt, std::ostream& out);

}  // namespace bugs::cli
