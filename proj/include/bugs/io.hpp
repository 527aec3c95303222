#pragma once

// JSON and CSV encodings of the simulation records.
//
// CSV tables start with "# key=value" provenance lines followed by a fixed
// header row. Column sets:
//   trajectory       t,theta_1,...,theta_N
//   order parameter  t,r,psi,psi_defined
//   stability        alpha,p_hat,std_err,ci_low,ci_high,analytic,covers,m_trials,undetermined
//   sweep            n_bugs,dt,p_coalesce,std_err,ci_low,ci_high,m_trials,undetermined,reliable
//   montecarlo       n_bugs,dt,m_trials,classified,undetermined,p_cycle,cycle_ci_low,
//                    cycle_ci_high,p_coalesce,coalesce_ci_low,coalesce_ci_high,std_err,reliable
// Real numbers in CSV use 12 significant digits; JSON keeps full precision
// so records parse back unchanged.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bugs/monte_carlo.hpp"
#include "bugs/order_param.hpp"
#include "bugs/steady_state.hpp"

namespace bugs {

const char* version();

/// Run metadata embedded in every output. Worker count is deliberately
/// absent: it never changes results.
struct Provenance {
    std::string command;
    std::uint64_t seed = 0;
    std::optional<double> dt;  // unset: per-N default
    double t_max = 0.0;
    std::size_t check_every = 0;
    std::optional<std::size_t> m_trials;
    std::vector<std::pair<std::string, std::string>> extra;
};

/// Decimal text with 12 significant digits.
std::string format_real(double x);

void write_provenance_comments(std::ostream& os, const Provenance& p);

void write_trajectory_csv(std::ostream& os, std::span<const TrajectorySample> trajectory);
void write_order_parameter_csv(std::ostream& os, std::span<const OrderParameterSample> samples);
void write_stability_csv(std::ostream& os, std::span<const mc::StabilityPoint> points);
void write_sweep_csv(std::ostream& os, std::span<const mc::SweepRow> rows);
void write_fit_comments(std::ostream& os, const mc::PowerLawFit& fit);
void write_montecarlo_csv(std::ostream& os, std::size_t n_bugs, double dt, const mc::ProbabilityEstimate& cycle);

/// Complement of an estimate: P(coalesce) from P(cycle) counts.
mc::ProbabilityEstimate complement(const mc::ProbabilityEstimate& e);

void to_json(nlohmann::ordered_json& j, const Provenance& p);
void to_json(nlohmann::ordered_json& j, const Outcome& o);
void to_json(nlohmann::ordered_json& j, const BugConfiguration& c);
void to_json(nlohmann::ordered_json& j, const TrajectorySample& s);
void to_json(nlohmann::ordered_json& j, const TrialResult& r);
void to_json(nlohmann::ordered_json& j, const OrderParameterSample& s);

void from_json(const nlohmann::ordered_json& j, Outcome& o);
void from_json(const nlohmann::ordered_json& j, TrialResult& r);
void from_json(const nlohmann::ordered_json& j, OrderParameterSample& s);

/// Angles and 1-based cluster lists; the clusters must match the angles.
BugConfiguration configuration_from_json(const nlohmann::ordered_json& j);

namespace mc {

void to_json(nlohmann::ordered_json& j, const ProbabilityEstimate& e);
void to_json(nlohmann::ordered_json& j, const StabilityPoint& p);
void to_json(nlohmann::ordered_json& j, const SweepRow& r);
void to_json(nlohmann::ordered_json& j, const PowerLawFit& f);

void from_json(const nlohmann::ordered_json& j, ProbabilityEstimate& e);
void from_json(const nlohmann::ordered_json& j, StabilityPoint& p);
void from_json(const nlohmann::ordered_json& j, SweepRow& r);
void from_json(const nlohmann::ordered_json& j, PowerLawFit& f);

}  // namespace mc

}  // namespace bugs
