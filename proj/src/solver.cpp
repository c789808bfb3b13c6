#include "ivopt/solver.hpp"

#include <stdexcept>

#include "ivopt/errors.hpp"

namespace ivopt {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::SmallDirection: return "SmallDirection";
    case Termination::CriticalBox: return "CriticalBox";
    case Termination::MaxIters: return "MaxIters";
    case Termination::LineSearchFailure: return "LineSearchFailure";
    case Termination::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

void check_config(const SolverConfig& cfg) {
  if (!(cfg.epsilon > 0.0))
    throw std::invalid_argument("epsilon must be positive");
  if (cfg.max_iters < 0)
    throw std::invalid_argument("max_iters must be nonnegative");
}

void attach_final_check(Trace& tr, const IntervalBox& g) {
  if (g.size() <= 16) tr.final_critical_check = criticality_oracle(g);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Trace run(const IVFunction& f, const Eigen::VectorXd& x0,
          const SolverConfig& cfg) {
  check_config(cfg);
  if (x0.size() != f.dim())
    throw std::invalid_argument("start point dimension mismatch");

  const int n = f.dim();
  std::mt19937_64 rng(cfg.seed);
  Eigen::VectorXd t = draw_t(cfg.t_strategy, n, &rng);

  Trace tr;
  Eigen::VectorXd x = x0;
  int k = 0;

  // Errors at the start point propagate to the caller; once iterating,
  // failures become termination reasons.
  Interval F = evaluate(f, x);
  IntervalBox g =
      gradient_box_with_fallback(f, x, cfg.gradient_method, cfg.fd_step);

  for (;;) {
    if (cfg.redraw_t_each_iteration && k > 0)
      t = draw_t(cfg.t_strategy, n, &rng);
    Eigen::VectorXd d = candidate_direction(g, t);
    tr.records.push_back({k, x, F, d, std::nullopt});

    if (d.norm() < cfg.epsilon) {
      tr.termination = Termination::SmallDirection;
      attach_final_check(tr, g);
      return tr;
    }

    DescentCertificate cert = certify(d, g);
    if (!cert.is_descent) {
      if (is_critical(g)) {
        tr.termination = Termination::CriticalBox;
        attach_final_check(tr, g);
        return tr;
      }
      // The drawn t produced an uncertified candidate; retry once with the
      // upper-endpoint choice before giving up.
      d = candidate_direction(g, Eigen::VectorXd::Zero(n));
      cert = certify(d, g);
      if (!cert.is_descent) {
        tr.termination = Termination::LineSearchFailure;
        tr.error = "candidate direction has no descent certificate";
        return tr;
      }
      tr.records.back().d = d;
    }

    if (k == cfg.max_iters) {
      tr.termination = Termination::MaxIters;
      return tr;
    }

    try {
      const StepLength sl = step_length(f, x, d, cfg.ls);
      tr.records.back().alpha = sl.alpha;
      x = x + sl.alpha * d;
      ++k;
      F = evaluate(f, x);
      g = gradient_box_with_fallback(f, x, cfg.gradient_method, cfg.fd_step);
    } catch (const UnboundedError& e) {
      tr.termination = Termination::Unbounded;
      tr.error = e.what();
      return tr;
    } catch (const Error& e) {
      tr.termination = Termination::LineSearchFailure;
      tr.error = e.what();
      return tr;
    }
  }
}

std::vector<Trace> multi_start(const IVFunction& f,
                               const std::vector<Eigen::VectorXd>& starts,
                               const SolverConfig& cfg) {
  if (starts.empty())
    throw std::invalid_argument("multi_start needs at least one start point");
  std::vector<Trace> traces;
  traces.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    SolverConfig sub = cfg;
    sub.seed = splitmix64(cfg.seed ^ splitmix64(i));
    try {
      traces.push_back(run(f, starts[i], sub));
    } catch (const Error& e) {
      Trace tr;
      tr.termination = Termination::LineSearchFailure;
      tr.error = e.what();
      traces.push_back(std::move(tr));
    }
  }
  return traces;
}

}  // namespace ivopt
