#include "ivopt/line_search.hpp"

#include <cmath>
#include <stdexcept>

#include "ivopt/errors.hpp"

namespace ivopt {

namespace {

void check_params(const LineSearchParams& p) {
  if (!(p.tol > 0.0)) throw std::invalid_argument("line search tol must be > 0");
  if (!(p.alpha_max >= p.tol))
    throw std::invalid_argument("alpha_max must be at least tol");
  if (p.max_bracket_doublings < 1)
    throw std::invalid_argument("need at least one bracket doubling");
}

double checked(const std::function<double(double)>& phi, double a) {
  const double v = phi(a);
  if (!std::isfinite(v))
    throw ArithmeticRangeError("line search objective is not finite");
  return v;
}

struct Bracket {
  double a, b;
};

// Doubles from tol until phi stops decreasing; the returned bracket spans
// the two points around the best sample seen.
Bracket bracket_minimum(const std::function<double(double)>& phi,
                        const LineSearchParams& p) {
  double prev2 = 0.0;
  double prev = p.tol;
  double f_prev = checked(phi, prev);
  for (int k = 0; k < p.max_bracket_doublings; ++k) {
    double cur = prev * 2.0;
    if (cur > p.alpha_max) cur = p.alpha_max;
    const double f_cur = checked(phi, cur);
    if (f_cur >= f_prev) return {prev2, cur};
    if (cur >= p.alpha_max)
      throw UnboundedError("objective still decreasing at the step budget");
    prev2 = prev;
    prev = cur;
    f_prev = f_cur;
  }
  throw UnboundedError("no bracket within the doubling budget");
}

double golden_section(const std::function<double(double)>& phi, double a,
                      double b, double tol) {
  constexpr double kRatio = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - kRatio * (b - a);
  double d = a + kRatio * (b - a);
  double fc = checked(phi, c);
  double fd = checked(phi, d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kRatio * (b - a);
      fc = checked(phi, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kRatio * (b - a);
      fd = checked(phi, d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double minimize_1d(const std::function<double(double)>& phi,
                   const LineSearchParams& params) {
  check_params(params);
  const Bracket br = bracket_minimum(phi, params);
  return golden_section(phi, br.a, br.b, params.tol);
}

StepLength step_length(const IVFunction& f, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& d,
                       const LineSearchParams& params) {
  check_params(params);
  if (x.size() != f.dim() || d.size() != f.dim())
    throw std::invalid_argument("point/direction dimension mismatch");

  const auto phi_lo = [&](double a) { return evaluate(f, x + a * d).lo(); };
  const auto phi_hi = [&](double a) { return evaluate(f, x + a * d).hi(); };

  StepLength result{};
  result.alpha_lower = minimize_1d(phi_lo, params);
  result.alpha_upper = minimize_1d(phi_hi, params);
  result.alpha = std::min(result.alpha_lower, result.alpha_upper);

  // The 1-D tolerance can leave the minimizer a hair past the point of
  // strict interval decrease; halve until the decrease is strict.
  const Interval f0 = evaluate(f, x);
  double alpha = result.alpha;
  for (int tries = 0; tries <= 30; ++tries) {
    if (strictly_precedes(evaluate(f, x + alpha * d), f0)) {
      result.alpha = alpha;
      return result;
    }
    alpha *= 0.5;
  }
  throw LineSearchError("no strict interval decrease along the direction");
}

namespace {

// Central-difference derivative of phi at a > 0, stencil kept inside (0, inf).
double dir_derivative(const std::function<double(double)>& phi, double a) {
  const double h = std::min(std::max(kDefaultFdStep, 1e-8 * (1.0 + a)), a / 2);
  return (phi(a + h) - phi(a - h)) / (2.0 * h);
}

double first_root(const std::function<double(double)>& phi,
                  const LineSearchParams& p) {
  const auto psi = [&](double a) { return dir_derivative(phi, a); };
  double prev = p.tol;
  double psi_prev = psi(prev);
  if (!std::isfinite(psi_prev))
    throw ArithmeticRangeError("directional derivative is not finite");
  if (psi_prev >= 0.0) return prev;  // already past the minimum
  double cur = prev;
  bool bracketed = false;
  for (int k = 0; k < p.max_bracket_doublings; ++k) {
    cur = prev * 2.0;
    if (cur > p.alpha_max) cur = p.alpha_max;
    const double psi_cur = psi(cur);
    if (psi_cur >= 0.0) {
      bracketed = true;
      break;
    }
    if (cur >= p.alpha_max) break;
    prev = cur;
  }
  if (!bracketed)
    throw UnboundedError("no derivative sign change within the step budget");

  // The doubling bracket can hold several sign changes; scan for the first.
  double lo = prev, hi = cur;
  const int kScan = 64;
  double a = lo;
  double psi_a = psi(a);
  for (int j = 1; j <= kScan; ++j) {
    const double b = lo + (hi - lo) * j / kScan;
    const double psi_b = psi(b);
    if (psi_a < 0.0 && psi_b >= 0.0) {
      lo = a;
      hi = b;
      break;
    }
    a = b;
    psi_a = psi_b;
  }
  while (hi - lo > p.tol) {
    const double mid = 0.5 * (lo + hi);
    if (psi(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double convex_step_by_derivative_root(const IVFunction& f,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& d,
                                      const LineSearchParams& params) {
  check_params(params);
  if (x.size() != f.dim() || d.size() != f.dim())
    throw std::invalid_argument("point/direction dimension mismatch");
  const auto phi_lo = [&](double a) { return evaluate(f, x + a * d).lo(); };
  const auto phi_hi = [&](double a) { return evaluate(f, x + a * d).hi(); };
  return std::min(first_root(phi_lo, params), first_root(phi_hi, params));
}

}  // namespace ivopt
