#include "ivopt/function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ivopt/errors.hpp"

namespace ivopt {

Eigen::VectorXd IntervalBox::lower() const {
  Eigen::VectorXd v(size());
  for (int i = 0; i < size(); ++i) v[i] = comps_[i].lo();
  return v;
}

Eigen::VectorXd IntervalBox::upper() const {
  Eigen::VectorXd v(size());
  for (int i = 0; i < size(); ++i) v[i] = comps_[i].hi();
  return v;
}

IVExpr::IVExpr(std::vector<IVTerm> terms, int dim)
    : terms_(std::move(terms)), dim_(dim) {
  if (dim_ <= 0) throw std::invalid_argument("dimension must be positive");
  if (terms_.empty())
    throw std::invalid_argument("expression needs at least one term");
  if (terms_.front().markov)
    throw std::invalid_argument("first term cannot be Markov-subtracted");
  for (const IVTerm& t : terms_)
    if (t.basis.min_dim() > dim_)
      throw std::invalid_argument(
          "expression uses a variable beyond the declared dimension");
}

std::string IVExpr::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) os << (terms_[i].markov ? " -M " : " + ");
    os << to_string(terms_[i].coeff) << "*" << terms_[i].basis.str();
  }
  return os.str();
}

bool operator==(const IVExpr& a, const IVExpr& b) {
  if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].markov != b.terms_[i].markov) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (!(a.terms_[i].basis == b.terms_[i].basis)) return false;
  }
  return true;
}

IVFunction::IVFunction(IVExpr expr) : expr_(std::move(expr)), dim_(0) {
  dim_ = expr_->dim();
}

IVFunction::IVFunction(BoundFn lower, BoundFn upper, int dim)
    : lower_(std::move(lower)), upper_(std::move(upper)), dim_(dim) {
  if (dim_ <= 0) throw std::invalid_argument("dimension must be positive");
  if (!lower_ || !upper_)
    throw std::invalid_argument("both bound functions are required");
}

const IVExpr& IVFunction::expr() const {
  if (!expr_) throw std::invalid_argument("function has no expression form");
  return *expr_;
}

Interval IVFunction::operator()(const Eigen::VectorXd& x) const {
  return evaluate(*this, x);
}

namespace {

void check_dim(const IVFunction& f, const Eigen::VectorXd& x) {
  if (x.size() != f.dim())
    throw std::invalid_argument("point dimension does not match function");
}

Interval fold_expr(const IVExpr& e, const Eigen::VectorXd& x) {
  double lo = 0.0, hi = 0.0;
  for (const IVTerm& t : e.terms()) {
    const double b = t.basis.value(x);
    if (!std::isfinite(b))
      throw ArithmeticRangeError("basis function value is not finite");
    const Interval term = scale(b, t.coeff);
    if (!t.markov) {
      lo += term.lo();
      hi += term.hi();
    } else {
      const double u = lo - term.lo();
      const double v = hi - term.hi();
      lo = std::min(u, v);
      hi = std::max(u, v);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw ArithmeticRangeError("interval evaluation overflowed");
  }
  return Interval(lo, hi);
}

Interval eval_bounds(const IVFunction::BoundFn& lower,
                     const IVFunction::BoundFn& upper,
                     const Eigen::VectorXd& x) {
  const double lo = lower(x);
  const double hi = upper(x);
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw ArithmeticRangeError("bound function value is not finite");
  if (lo > hi + kZeroTol)
    throw ModelError("lower bound exceeds upper bound at evaluation point");
  return Interval(lo, hi);
}

// Running fold value together with the gradients of both endpoints.
// Throws KinkError where the active selection is ambiguous: a term basis
// at zero with a non-degenerate coefficient, or a Markov step whose lower
// and upper candidates tie with different gradients.
struct BoundDerivs {
  double lo, hi;
  Eigen::VectorXd dlo, dhi;
};

BoundDerivs fold_with_derivatives(const IVExpr& e, const Eigen::VectorXd& x) {
  const auto n = x.size();
  BoundDerivs acc{0.0, 0.0, Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  Eigen::VectorXd gb(n);
  for (const IVTerm& t : e.terms()) {
    const double b = t.basis.value_and_gradient(x, gb);
    if (!std::isfinite(b))
      throw ArithmeticRangeError("basis function value is not finite");
    double tlo, thi;
    Eigen::VectorXd dtlo, dthi;
    if (std::abs(b) <= kZeroTol && t.coeff.width() > 0.0) {
      throw KinkError("term basis vanishes at the evaluation point");
    } else if (b >= 0.0) {
      tlo = t.coeff.lo() * b;
      thi = t.coeff.hi() * b;
      dtlo = t.coeff.lo() * gb;
      dthi = t.coeff.hi() * gb;
    } else {
      tlo = t.coeff.hi() * b;
      thi = t.coeff.lo() * b;
      dtlo = t.coeff.hi() * gb;
      dthi = t.coeff.lo() * gb;
    }
    if (!t.markov) {
      acc.lo += tlo;
      acc.hi += thi;
      acc.dlo += dtlo;
      acc.dhi += dthi;
    } else {
      const double u = acc.lo - tlo;
      const double v = acc.hi - thi;
      Eigen::VectorXd du = acc.dlo - dtlo;
      Eigen::VectorXd dv = acc.dhi - dthi;
      if (std::abs(u - v) <= kZeroTol * (1.0 + std::abs(u) + std::abs(v)) &&
          (du - dv).lpNorm<Eigen::Infinity>() >
              kZeroTol * (1.0 + du.lpNorm<Eigen::Infinity>() +
                          dv.lpNorm<Eigen::Infinity>())) {
        throw KinkError("bound functions cross at the evaluation point");
      }
      if (u <= v) {
        acc.lo = u;
        acc.hi = v;
        acc.dlo = std::move(du);
        acc.dhi = std::move(dv);
      } else {
        acc.lo = v;
        acc.hi = u;
        acc.dlo = std::move(dv);
        acc.dhi = std::move(du);
      }
    }
    if (!std::isfinite(acc.lo) || !std::isfinite(acc.hi))
      throw ArithmeticRangeError("interval evaluation overflowed");
  }
  return acc;
}

double fd_step_for(double fd_step, double xi) {
  return std::max(fd_step, 1e-8 * (1.0 + std::abs(xi)));
}

Interval fd_partial(const IVFunction& f, int i, const Eigen::VectorXd& x,
                    double fd_step) {
  const double h = fd_step_for(fd_step, x[i]);
  Eigen::VectorXd xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  const Interval fp = evaluate(f, xp);
  const Interval fm = evaluate(f, xm);
  const double dlo = (fp.lo() - fm.lo()) / (2.0 * h);
  const double dhi = (fp.hi() - fm.hi()) / (2.0 * h);
  return Interval(dlo, dhi);
}

}  // namespace

Interval evaluate(const IVFunction& f, const Eigen::VectorXd& x) {
  check_dim(f, x);
  if (f.is_expr()) return fold_expr(f.expr(), x);
  return eval_bounds(f.lower_, f.upper_, x);
}

IVFunction::BoundFn bound_fn(const IVFunction& f, Side side) {
  if (side == Side::Lower)
    return [f](const Eigen::VectorXd& x) { return evaluate(f, x).lo(); };
  return [f](const Eigen::VectorXd& x) { return evaluate(f, x).hi(); };
}

Interval partial(const IVFunction& f, int i, const Eigen::VectorXd& x,
                 GradientMethod method, double fd_step) {
  check_dim(f, x);
  if (i < 0 || i >= f.dim())
    throw std::invalid_argument("partial index out of range");
  if (method == GradientMethod::Analytic) {
    if (!f.is_expr())
      throw std::invalid_argument(
          "analytic gradients need the expression form");
    const BoundDerivs d = fold_with_derivatives(f.expr(), x);
    return Interval(d.dlo[i], d.dhi[i]);
  }
  return fd_partial(f, i, x, fd_step);
}

IntervalBox gradient_box(const IVFunction& f, const Eigen::VectorXd& x,
                         GradientMethod method, double fd_step) {
  check_dim(f, x);
  std::vector<Interval> comps;
  comps.reserve(f.dim());
  if (method == GradientMethod::Analytic) {
    if (!f.is_expr())
      throw std::invalid_argument(
          "analytic gradients need the expression form");
    const BoundDerivs d = fold_with_derivatives(f.expr(), x);
    for (int i = 0; i < f.dim(); ++i)
      comps.emplace_back(d.dlo[i], d.dhi[i]);
  } else {
    for (int i = 0; i < f.dim(); ++i)
      comps.push_back(fd_partial(f, i, x, fd_step));
  }
  return IntervalBox(std::move(comps));
}

IntervalBox gradient_box_with_fallback(const IVFunction& f,
                                       const Eigen::VectorXd& x,
                                       GradientMethod method, double fd_step,
                                       GradientMethod* used) {
  if (method == GradientMethod::Analytic && f.is_expr()) {
    try {
      IntervalBox g = gradient_box(f, x, GradientMethod::Analytic, fd_step);
      if (used) *used = GradientMethod::Analytic;
      return g;
    } catch (const KinkError&) {
      // fall through to finite differences
    }
  }
  if (used) *used = GradientMethod::FiniteDiff;
  return gradient_box(f, x, GradientMethod::FiniteDiff, fd_step);
}

MeanValueReport mean_value_inclusion_check(const IVFunction& f,
                                           const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v,
                                           int samples) {
  check_dim(f, u);
  check_dim(f, v);
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  if ((u.array() == v.array()).all())
    throw std::invalid_argument("segment endpoints must differ");

  MeanValueReport rep;
  rep.samples = samples;
  rep.lhs = markov_sub(evaluate(f, v), evaluate(f, u));

  const Eigen::VectorXd dir = v - u;
  const GradientMethod method =
      f.is_expr() ? GradientMethod::Analytic : GradientMethod::FiniteDiff;
  bool have_hull = false;
  Interval hull_acc;
  for (int j = 0; j < samples; ++j) {
    const double t = (j + 0.5) / samples;
    const Eigen::VectorXd c = u + t * dir;
    IntervalBox g;
    try {
      g = gradient_box(f, c, method);
    } catch (const KinkError&) {
      ++rep.skipped;
      continue;
    }
    Interval s;
    for (int i = 0; i < g.size(); ++i) s = s + scale(dir[i], g[i]);
    hull_acc = have_hull ? hull(hull_acc, s) : s;
    have_hull = true;
  }
  if (rep.skipped * 10 > samples || !have_hull)
    throw InconclusiveError("too many gradient samples failed on the segment");

  rep.rhs_hull = hull_acc;
  rep.inflation = 1e-6 + 1e-3 * rep.rhs_hull.width();
  rep.contained = contains(rep.rhs_hull, rep.lhs, rep.inflation);
  return rep;
}

}  // namespace ivopt
