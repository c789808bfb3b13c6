#pragma once

#include <string>

#include <json.hpp>

#include "ivopt/descent.hpp"
#include "ivopt/function.hpp"
#include "ivopt/solver.hpp"

namespace ivopt {

// Intervals serialize as two-element arrays [lo, hi].
void to_json(nlohmann::json& j, const Interval& a);
void from_json(const nlohmann::json& j, Interval& a);

void to_json(nlohmann::json& j, const IntervalBox& box);

nlohmann::json to_json(const SolverConfig& cfg);
nlohmann::json to_json(const CriticalityReport& report);

/// Full-precision trace document: {problem, config, records[], termination,
/// critical_check}.
nlohmann::json trace_to_json(const Trace& trace, const std::string& problem,
                             const SolverConfig& cfg);

/// One row per record: k, x..., F_lo, F_hi, d..., alpha (empty when absent).
std::string trace_to_csv(const Trace& trace);

/// Iteration table with five-decimal columns k, x, F, d, alpha.
std::string format_table(const Trace& trace);

/// "(a, b, ...)" at five decimals.
std::string format_point(const Eigen::VectorXd& v);

/// "[lo, hi]" at five decimals.
std::string format_interval_5(const Interval& a);

/// "([lo, hi], ...)" at five decimals.
std::string format_box(const IntervalBox& box);

}  // namespace ivopt
