#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ivopt/errors.hpp"
#include "ivopt/line_search.hpp"
#include "test_util.hpp"

using ivopt::Interval;
using ivopt::IVFunction;
using ivopt::LineSearchParams;
using ivopt::minimize_1d;
using ivopt::step_length;
using testutil::builtin_example;
using testutil::pt;

namespace {

// Dense scan oracle: global minimizer of phi on (0, hi].
double grid_argmin(const std::function<double(double)>& phi, double hi,
                   int points) {
  double best_a = hi, best_v = phi(hi);
  for (int i = 1; i < points; ++i) {
    const double a = hi * i / points;
    const double v = phi(a);
    if (v < best_v) {
      best_v = v;
      best_a = a;
    }
  }
  return best_a;
}

}  // namespace

TEST_CASE("quadratic minima") {
  LineSearchParams p;
  CHECK(minimize_1d([](double a) { return (a - 1) * (a - 1); }, p) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(minimize_1d([](double a) { return (a - 0.5) * (a - 0.5) + 3; }, p) ==
        doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("monotone decrease is unbounded") {
  LineSearchParams p;
  CHECK_THROWS_AS(minimize_1d([](double a) { return -a; }, p),
                  ivopt::UnboundedError);
}

TEST_CASE("invalid parameters are rejected") {
  LineSearchParams p;
  p.tol = 0.0;
  CHECK_THROWS_AS(minimize_1d([](double a) { return a * a; }, p),
                  std::invalid_argument);
  p = LineSearchParams{};
  p.alpha_max = 1e-12;
  CHECK_THROWS_AS(minimize_1d([](double a) { return a * a; }, p),
                  std::invalid_argument);
}

TEST_CASE("step along the example's first direction") {
  const IVFunction f = builtin_example();
  const Eigen::Vector2d x0(1, 1);
  const Eigen::Vector2d d0(-13, -4);
  LineSearchParams p;

  const auto sl = step_length(f, x0, d0, p);

  // The upper bound along this ray dips to a corner where its two branch
  // quadratics cross, at (22 + sqrt(1692))/604.
  const double upper_min = (22.0 + std::sqrt(1692.0)) / 604.0;
  CHECK(sl.alpha_upper == doctest::Approx(upper_min).epsilon(1e-5));

  // The lower bound has two stationary points along the ray; either basin
  // is a legitimate bracketed minimum.
  const double lower_first = 155.0 / 1624.0;
  const double lower_second = 133.0 / 1020.0;
  const bool in_first = std::abs(sl.alpha_lower - lower_first) < 1e-5;
  const bool in_second = std::abs(sl.alpha_lower - lower_second) < 1e-5;
  CHECK((in_first || in_second));

  CHECK(sl.alpha == doctest::Approx(std::min(sl.alpha_lower, sl.alpha_upper)));
  CHECK(strictly_precedes(evaluate(f, x0 + sl.alpha * d0), evaluate(f, x0)));

  // cross-check the frozen corner against a dense scan of the actual ray
  const auto phi_hi = [&](double a) {
    return evaluate(f, x0 + a * d0).hi();
  };
  CHECK(grid_argmin(phi_hi, 0.3, 300000) ==
        doctest::Approx(upper_min).epsilon(1e-4));
}

TEST_CASE("degenerate coefficients give one minimizer") {
  const IVFunction f(ivopt::parse_ivexpr("[1,1]*x1^2 + [1,1]*x2^2", 2));
  const Eigen::Vector2d x0(1, 1);
  const Eigen::Vector2d d(-1, -1);
  const auto sl = step_length(f, x0, d, LineSearchParams{});
  CHECK(sl.alpha_lower == doctest::Approx(sl.alpha_upper).epsilon(1e-6));
  CHECK(sl.alpha == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bound pair with different minimizers takes the smaller") {
  const IVFunction f(
      [](const Eigen::VectorXd& x) { return (x[0] - 1) * (x[0] - 1); },
      [](const Eigen::VectorXd& x) {
        return (x[0] - 0.5) * (x[0] - 0.5) + 1.0;
      },
      1);
  Eigen::VectorXd x0(1), d(1);
  x0 << 0.0;
  d << 1.0;
  const auto sl = step_length(f, x0, d, LineSearchParams{});
  CHECK(sl.alpha_lower == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sl.alpha_upper == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(sl.alpha == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("ascending direction fails the post-check") {
  const IVFunction f(ivopt::parse_ivexpr("[1,1]*x1^2 + [1,1]*x2^2", 2));
  CHECK_THROWS_AS(
      step_length(f, pt(1, 1), pt(2, 2), LineSearchParams{}),
      ivopt::LineSearchError);
}

TEST_CASE("unbounded ray surfaces from step_length") {
  const IVFunction f(ivopt::parse_ivexpr("[1,2]*x1", 1));
  Eigen::VectorXd x0(1), d(1);
  x0 << 0.0;
  d << -1.0;
  CHECK_THROWS_AS(step_length(f, x0, d, LineSearchParams{}),
                  ivopt::UnboundedError);
}

TEST_CASE("derivative-root step matches on convex instances") {
  LineSearchParams p;

  const IVFunction f1(ivopt::parse_ivexpr("[1,1]*x1^2", 1));
  Eigen::VectorXd x(1), d(1);
  x << 1.0;
  d << -1.0;
  const double root = convex_step_by_derivative_root(f1, x, d, p);
  CHECK(root == doctest::Approx(1.0).epsilon(1e-5));
  const auto sl = step_length(f1, x, d, p);
  CHECK(std::abs(root - sl.alpha) <= 10 * p.tol + 1e-6);

  const IVFunction f2(ivopt::parse_ivexpr("[1,1]*x1^2 + [2,2]*x2^2", 2));
  const Eigen::Vector2d x2(1, 1), d2(-2, -4);
  const double root2 = convex_step_by_derivative_root(f2, x2, d2, p);
  CHECK(root2 == doctest::Approx(20.0 / 72.0).epsilon(1e-5));
  const auto sl2 = step_length(f2, x2, d2, p);
  CHECK(std::abs(root2 - sl2.alpha) <= 10 * p.tol + 1e-6);
}

TEST_CASE("derivative-root step without a bracket is unbounded") {
  const IVFunction f(ivopt::parse_ivexpr("[1,1]*x1", 1));
  Eigen::VectorXd x(1), d(1);
  x << 0.0;
  d << -1.0;
  CHECK_THROWS_AS(convex_step_by_derivative_root(f, x, d, LineSearchParams{}),
                  ivopt::UnboundedError);
}

TEST_CASE("derivative-root step takes the first root on the example ray") {
  const IVFunction f = builtin_example();
  const Eigen::Vector2d x0(1, 1), d0(-13, -4);
  const double root = convex_step_by_derivative_root(f, x0, d0,
                                                     LineSearchParams{});
  // first stationary point of the lower bound along the ray
  CHECK(root == doctest::Approx(155.0 / 1624.0).epsilon(1e-4));
}

TEST_CASE("step is stable under tolerance refinement") {
  const IVFunction f = builtin_example();
  const Eigen::Vector2d x0(1, 1), d0(-13, -4);
  LineSearchParams coarse, fine;
  coarse.tol = 1e-8;
  fine.tol = 1e-9;
  const auto a = step_length(f, x0, d0, coarse);
  const auto b = step_length(f, x0, d0, fine);
  CHECK(std::abs(a.alpha - b.alpha) <= 10 * coarse.tol);
}
