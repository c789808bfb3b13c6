#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivopt/descent.hpp"
#include "ivopt/function.hpp"
#include "ivopt/line_search.hpp"

namespace ivopt {

struct SolverConfig {
  double epsilon = 1e-5;  // stop when the Euclidean norm of d drops below
  int max_iters = 200;
  TStrategy t_strategy;
  LineSearchParams ls;
  GradientMethod gradient_method = GradientMethod::Analytic;
  double fd_step = kDefaultFdStep;
  std::uint64_t seed = 0;
  // t parameters are drawn once up front by default; this redraws each
  // iteration instead.
  bool redraw_t_each_iteration = false;
};

enum class Termination {
  SmallDirection,
  CriticalBox,
  MaxIters,
  LineSearchFailure,
  Unbounded,
};

const char* to_string(Termination t);

/// One row of the iteration trace. Recorded before stepping, so the final
/// row of a finished run has no step length.
struct IterationRecord {
  int k = 0;
  Eigen::VectorXd x;
  Interval F;
  Eigen::VectorXd d;
  std::optional<double> alpha;
};

struct Trace {
  std::vector<IterationRecord> records;
  Termination termination = Termination::MaxIters;
  // Orthant check at the final iterate, on SmallDirection/CriticalBox
  // termination (dimension permitting).
  std::optional<CriticalityReport> final_critical_check;
  std::string error;  // detail for failure terminations
};

/// Iterates x <- x + alpha*d with candidate directions from the gradient
/// box and exact line-search steps, until the direction norm falls under
/// epsilon, the box is critical, the budget runs out, or the line search
/// fails. Consecutive stepped records strictly decrease in interval order.
Trace run(const IVFunction& f, const Eigen::VectorXd& x0,
          const SolverConfig& cfg);

/// Independent runs per start with sub-seeds derived deterministically from
/// cfg.seed and the start index; per-run errors are isolated into that
/// run's trace.
std::vector<Trace> multi_start(const IVFunction& f,
                               const std::vector<Eigen::VectorXd>& starts,
                               const SolverConfig& cfg);

}  // namespace ivopt
