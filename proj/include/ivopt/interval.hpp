#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ivopt/errors.hpp"

namespace ivopt {

// Comparison tolerance shared by the zero-membership tests and the kink
// detection in analytic differentiation.
inline constexpr double kZeroTol = 1e-9;

/// A compact real interval [lo, hi] with lo <= hi and finite endpoints.
/// Construction from an unordered endpoint pair sorts, so improper
/// intervals are not representable. Values are immutable.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}

  Interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw ArithmeticRangeError("interval endpoint is not finite");
    lo_ = std::min(a, b);
    hi_ = std::max(a, b);
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  bool degenerate() const { return lo_ == hi_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) {
    return !(a == b);
  }

 private:
  double lo_;
  double hi_;
};

/// Endpoint-wise sum.
inline Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}
inline Interval operator+(const Interval& a, const Interval& b) {
  return add(a, b);
}

/// Markov difference: [min(a.lo-b.lo, a.hi-b.hi), max(a.lo-b.lo, a.hi-b.hi)].
/// Unlike the standard interval difference, markov_sub(a, a) == [0,0].
inline Interval markov_sub(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.lo(), a.hi() - b.hi());
}

/// (-1) * a = [-a.hi, -a.lo]; coincides with markov_sub([0,0], a).
inline Interval negate(const Interval& a) {
  return Interval(-a.hi(), -a.lo());
}
inline Interval operator-(const Interval& a) { return negate(a); }

/// Scalar product c * a; scale(0, a) == [0,0].
inline Interval scale(double c, const Interval& a) {
  if (!std::isfinite(c))
    throw ArithmeticRangeError("interval scale factor is not finite");
  return Interval(c * a.lo(), c * a.hi());
}
inline Interval operator*(double c, const Interval& a) { return scale(c, a); }
inline Interval operator*(const Interval& a, double c) { return scale(c, a); }

/// Interval product, min/max of the four endpoint products.
inline Interval mul(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}
inline Interval operator*(const Interval& a, const Interval& b) {
  return mul(a, b);
}

/// max{|lo|, |hi|}.
inline double norm(const Interval& a) {
  return std::max(std::abs(a.lo()), std::abs(a.hi()));
}

/// max{|a.lo - b.lo|, |a.hi - b.hi|}; metric(a, [0,0]) == norm(a).
inline double metric(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

/// a < b on both endpoints.
inline bool strictly_precedes(const Interval& a, const Interval& b) {
  return a.lo() < b.lo() && a.hi() < b.hi();
}

/// a <= b on both endpoints and a != b.
inline bool precedes(const Interval& a, const Interval& b) {
  return a.lo() <= b.lo() && a.hi() <= b.hi() && a != b;
}

/// lo < -tau and hi > tau. The tolerance keeps floating-point gradient
/// noise near a critical point from flipping the zero-direction rule.
inline bool zero_in_interior(const Interval& a, double tau = kZeroTol) {
  return a.lo() < -tau && a.hi() > tau;
}

/// lo <= tau and hi >= -tau.
inline bool zero_in_closure(const Interval& a, double tau = kZeroTol) {
  return a.lo() <= tau && a.hi() >= -tau;
}

/// inner within outer inflated by slack on both sides.
inline bool contains(const Interval& outer, const Interval& inner,
                     double slack = 0.0) {
  return inner.lo() >= outer.lo() - slack && inner.hi() <= outer.hi() + slack;
}

/// Smallest interval covering both arguments.
inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

/// "[lo,hi]" with round-trip precision.
std::string to_string(const Interval& a);

/// Parse "[lo,hi]"; endpoints given out of order are sorted.
Interval parse_interval(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace ivopt
