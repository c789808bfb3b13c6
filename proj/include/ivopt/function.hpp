#pragma once

#include <Eigen/Core>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivopt/expr.hpp"
#include "ivopt/interval.hpp"

namespace ivopt {

/// Vector of intervals; holds the gradient box g(x) whose i-th component
/// hulls the two bound-function partials at x.
class IntervalBox {
 public:
  IntervalBox() = default;
  explicit IntervalBox(std::vector<Interval> components)
      : comps_(std::move(components)) {}
  IntervalBox(std::initializer_list<Interval> components)
      : comps_(components) {}

  int size() const { return static_cast<int>(comps_.size()); }
  const Interval& operator[](int i) const { return comps_[i]; }
  Interval& operator[](int i) { return comps_[i]; }

  auto begin() const { return comps_.begin(); }
  auto end() const { return comps_.end(); }

  /// Vector of lower endpoints.
  Eigen::VectorXd lower() const;
  /// Vector of upper endpoints.
  Eigen::VectorXd upper() const;

  friend bool operator==(const IntervalBox& a, const IntervalBox& b) {
    return a.comps_ == b.comps_;
  }

 private:
  std::vector<Interval> comps_;
};

/// One term of an interval expression: an interval coefficient times a real
/// basis function, joined into the running fold by + or the Markov minus.
struct IVTerm {
  bool markov = false;  // false: added; true: Markov-subtracted
  Interval coeff;
  RealExpr basis = RealExpr::constant(1.0);
};

/// Interval-valued expression. Evaluation folds terms left to right:
/// acc <- op(acc, basis(x) * coeff), starting from [0,0]. The Markov minus
/// is a binary fold step, not a negated coefficient: in general
/// a markov_sub b != a + (-1)*b.
class IVExpr {
 public:
  IVExpr(std::vector<IVTerm> terms, int dim);

  int dim() const { return dim_; }
  const std::vector<IVTerm>& terms() const { return terms_; }

  std::string str() const;

  friend bool operator==(const IVExpr& a, const IVExpr& b);

 private:
  std::vector<IVTerm> terms_;
  int dim_;
};

/// Parse the expression grammar:
///   expr      = term (('+' | '-M') term)*
///   term      = interval '*'? real-expr?
///   interval  = '[' number ',' number ']'
///   real-expr = sums/products/integer powers of x1..xn, numbers,
///               exp/sin/cos, parentheses; '-' inside is real negation.
/// A '+' or '-M' starts a new term only when an interval literal follows.
IVExpr parse_ivexpr(std::string_view text, int dim);

/// Interval-valued function F(x) = [F_lo(x), F_hi(x)], either an expression
/// or a user-supplied bound pair. Immutable after construction; evaluation
/// and differentiation are pure. User bound functions must be pure.
class IVFunction {
 public:
  using BoundFn = std::function<double(const Eigen::VectorXd&)>;

  explicit IVFunction(IVExpr expr);
  IVFunction(BoundFn lower, BoundFn upper, int dim);

  int dim() const { return dim_; }
  bool is_expr() const { return expr_.has_value(); }
  const IVExpr& expr() const;

  Interval operator()(const Eigen::VectorXd& x) const;

 private:
  friend Interval evaluate(const IVFunction&, const Eigen::VectorXd&);
  std::optional<IVExpr> expr_;
  BoundFn lower_, upper_;
  int dim_;
};

/// F(x). For the expression form this is the left-to-right fold; for the
/// bound form, [F_lo(x), F_hi(x)] with an inversion check.
Interval evaluate(const IVFunction& f, const Eigen::VectorXd& x);

enum class Side { Lower, Upper };

/// The real-valued endpoint function x -> evaluate(f, x).lo (or .hi).
IVFunction::BoundFn bound_fn(const IVFunction& f, Side side);

enum class GradientMethod { FiniteDiff, Analytic };

inline constexpr double kDefaultFdStep = 1e-6;

/// i-th gradient-box component [min, max] of the two bound-function
/// partials at x (i is 0-based). The analytic method tracks the active
/// coefficient endpoint per term and throws KinkError where a bound
/// function is not differentiable; finite differences use central stencils
/// with step max(fd_step, 1e-8*(1+|x_i|)).
Interval partial(const IVFunction& f, int i, const Eigen::VectorXd& x,
                 GradientMethod method = GradientMethod::Analytic,
                 double fd_step = kDefaultFdStep);

/// All components of the gradient box at x.
IntervalBox gradient_box(const IVFunction& f, const Eigen::VectorXd& x,
                         GradientMethod method = GradientMethod::Analytic,
                         double fd_step = kDefaultFdStep);

/// gradient_box that retries with finite differences when the analytic
/// method hits a kink; reports which method produced the result.
IntervalBox gradient_box_with_fallback(
    const IVFunction& f, const Eigen::VectorXd& x,
    GradientMethod method = GradientMethod::Analytic,
    double fd_step = kDefaultFdStep, GradientMethod* used = nullptr);

/// Result of the segment inclusion check between u and v.
struct MeanValueReport {
  Interval lhs;       // F(v) markov_sub F(u)
  Interval rhs_hull;  // hull over samples c of sum_i (v_i-u_i)*g_i(c)
  bool contained = false;
  int samples = 0;
  int skipped = 0;
  double inflation = 0.0;  // tolerance applied to the hull
};

/// Checks F(v) markov_sub F(u) against the hull of the sampled directional
/// gradient sum over the segment [u, v]. Samples are midpoints of m equal
/// subdivisions; samples where the gradient fails are skipped and counted,
/// more than 10% skipped raises InconclusiveError. The hull is inflated by
/// 1e-6 + 1e-3 * width(hull) since sampling can only under-cover the union.
MeanValueReport mean_value_inclusion_check(const IVFunction& f,
                                           const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v,
                                           int samples);

}  // namespace ivopt
