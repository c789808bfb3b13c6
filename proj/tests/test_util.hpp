#pragma once

#include <Eigen/Core>
#include <cmath>
#include <random>
#include <vector>

#include "ivopt/function.hpp"
#include "ivopt/problem.hpp"

namespace testutil {

inline ivopt::IVFunction builtin_example() {
  return ivopt::make_function(*ivopt::builtin_problem("paper-ex1"));
}

inline Eigen::Vector2d pt(double a, double b) {
  return Eigen::Vector2d(a, b);
}

// Independent oracle for the builtin example: its bound pair on each sign
// quadrant of the plane, written out as the explicit quadratics.
inline ivopt::Interval example_by_region(double x1, double x2) {
  double a, b;
  if (x1 >= 0 && x2 >= 0) {
    a = 2 * x1 * x1 + 2 * x1 * x2 + x2 * x2 + x1 - x2;
    b = 4 * x1 * x1 + 3 * x1 * x2 + 2 * x2 * x2 + 2 * x1 - 3 * x2;
  } else if (x1 <= 0 && x2 >= 0) {
    a = 2 * x1 * x1 + 3 * x1 * x2 + x2 * x2 + 2 * x1 - x2;
    b = 4 * x1 * x1 + 2 * x1 * x2 + 2 * x2 * x2 + x1 - 3 * x2;
  } else if (x1 <= 0 && x2 <= 0) {
    a = 2 * x1 * x1 + 2 * x1 * x2 + x2 * x2 + 2 * x1 - 3 * x2;
    b = 4 * x1 * x1 + 3 * x1 * x2 + 2 * x2 * x2 + x1 - x2;
  } else {
    a = 2 * x1 * x1 + 3 * x1 * x2 + x2 * x2 + x1 - 3 * x2;
    b = 4 * x1 * x1 + 2 * x1 * x2 + 2 * x2 * x2 + 2 * x1 - x2;
  }
  return ivopt::Interval(a, b);
}

inline ivopt::Interval random_interval(std::mt19937_64& rng,
                                       double span = 5.0) {
  std::uniform_real_distribution<double> u(-span, span);
  return ivopt::Interval(u(rng), u(rng));
}

inline ivopt::IntervalBox random_box(std::mt19937_64& rng, int n,
                                     double span = 5.0) {
  std::vector<ivopt::Interval> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) comps.push_back(random_interval(rng, span));
  return ivopt::IntervalBox(std::move(comps));
}

// Box with no component containing zero in its interior: each component is
// a signed interval bounded away from the origin.
inline ivopt::IntervalBox random_signed_box(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> mag(0.1, 5.0);
  std::bernoulli_distribution flip(0.5);
  std::vector<ivopt::Interval> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) {
    double a = mag(rng), b = mag(rng);
    if (flip(rng)) {
      a = -a;
      b = -b;
    }
    comps.push_back(ivopt::Interval(a, b));
  }
  return ivopt::IntervalBox(std::move(comps));
}

// Classical steepest descent with the analytically exact step for
// f(x) = sum_i c_i x_i^2, run to the same stopping rule as the solver.
inline Eigen::VectorXd classical_steepest_descent(
    const Eigen::VectorXd& coeffs, Eigen::VectorXd x, double epsilon,
    int max_iters) {
  for (int k = 0; k < max_iters; ++k) {
    Eigen::VectorXd g = 2.0 * coeffs.cwiseProduct(x);
    if (g.norm() < epsilon) break;
    const Eigen::VectorXd d = -g;
    const double denom = 2.0 * (coeffs.array() * d.array().square()).sum();
    const double alpha = -(2.0 * coeffs.cwiseProduct(x).dot(d)) / denom;
    x = x + alpha * d;
  }
  return x;
}

}  // namespace testutil
