#pragma once

#include <Eigen/Core>
#include <functional>

#include "ivopt/function.hpp"

namespace ivopt {

struct LineSearchParams {
  double tol = 1e-8;        // width of the final 1-D bracket
  double alpha_max = 1e6;   // bracketing budget
  int max_bracket_doublings = 60;
};

/// Approximate local minimizer of phi on (0, alpha_max]: double the step
/// from tol until phi stops decreasing, then golden-section the bracket
/// down to width tol. The first bracketed minimum is taken. Throws
/// UnboundedError when phi still decreases at the budget edge.
double minimize_1d(const std::function<double(double)>& phi,
                   const LineSearchParams& params);

struct StepLength {
  double alpha;        // min(alpha_lower, alpha_upper), after the post-check
  double alpha_lower;  // minimizer of the lower bound along the ray
  double alpha_upper;  // minimizer of the upper bound along the ray
};

/// Exact-line-search step along a certified descent direction: the two
/// bound restrictions are minimized independently and the smaller minimizer
/// is taken. The returned alpha is halved (at most 30 times) until
/// F(x + alpha d) strictly precedes F(x); failing that throws
/// LineSearchError.
StepLength step_length(const IVFunction& f, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& d, const LineSearchParams& params);

/// Step length for rays along which both bound restrictions are convex:
/// the smallest positive root of each directional derivative (finite
/// differences, bracketing plus bisection), returning the smaller root.
double convex_step_by_derivative_root(const IVFunction& f,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& d,
                                      const LineSearchParams& params);

}  // namespace ivopt
