#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>

#include "ivopt/function.hpp"

namespace ivopt {

/// A named problem: the function source plus a default start point.
struct ProblemSpec {
  std::string name;
  int dim = 0;
  std::string expr;                    // expression source, if any
  std::string lower_expr, upper_expr;  // bound pair source, if any
  Eigen::VectorXd default_x0;

  bool has_bounds() const { return !lower_expr.empty(); }
};

/// Built-in problem by id. "paper-ex1" is the two-variable example
/// [2,4]*x1^2 + [2,3]*x1*x2 + [1,2]*x2^2 + [1,2]*x1 -M [1,3]*x2 with
/// default start (1,1).
std::optional<ProblemSpec> builtin_problem(const std::string& id);

/// Load a problem from a JSON file: {name?, dim, expr | bounds{lower,upper},
/// x0?}.
ProblemSpec load_problem_file(const std::string& path);

/// Build the function described by the spec (parses expression sources).
IVFunction make_function(const ProblemSpec& spec);

}  // namespace ivopt
