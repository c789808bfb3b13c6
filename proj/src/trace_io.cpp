#include "ivopt/trace_io.hpp"

#include <cstdio>
#include <sstream>

namespace ivopt {

void to_json(nlohmann::json& j, const Interval& a) {
  j = nlohmann::json::array({a.lo(), a.hi()});
}

void from_json(const nlohmann::json& j, Interval& a) {
  if (!j.is_array() || j.size() != 2)
    throw ModelError("interval JSON must be a two-element array");
  a = Interval(j[0].get<double>(), j[1].get<double>());
}

void to_json(nlohmann::json& j, const IntervalBox& box) {
  j = nlohmann::json::array();
  for (const Interval& c : box) {
    nlohmann::json cj;
    to_json(cj, c);
    j.push_back(cj);
  }
}

namespace {

nlohmann::json vec_to_json(const Eigen::VectorXd& v) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

const char* t_kind_name(TStrategy::Kind k) {
  switch (k) {
    case TStrategy::Kind::Zero: return "zero";
    case TStrategy::Kind::Midpoint: return "midpoint";
    case TStrategy::Kind::Random: return "random";
    case TStrategy::Kind::Fixed: return "fixed";
  }
  return "zero";
}

}  // namespace

nlohmann::json to_json(const SolverConfig& cfg) {
  nlohmann::json t{{"kind", t_kind_name(cfg.t_strategy.kind)}};
  if (cfg.t_strategy.kind == TStrategy::Kind::Fixed)
    t["values"] = cfg.t_strategy.fixed_values;
  return nlohmann::json{
      {"epsilon", cfg.epsilon},
      {"max_iters", cfg.max_iters},
      {"t_strategy", t},
      {"line_search",
       {{"tol", cfg.ls.tol},
        {"alpha_max", cfg.ls.alpha_max},
        {"max_bracket_doublings", cfg.ls.max_bracket_doublings}}},
      {"gradient",
       cfg.gradient_method == GradientMethod::Analytic ? "analytic" : "fd"},
      {"fd_step", cfg.fd_step},
      {"seed", cfg.seed},
      {"redraw_t", cfg.redraw_t_each_iteration},
  };
}

nlohmann::json to_json(const CriticalityReport& report) {
  nlohmann::json orthants = nlohmann::json::array();
  for (const OrthantEntry& e : report.orthants) {
    std::string signs;
    for (int s : e.signs) signs += s > 0 ? '+' : '-';
    orthants.push_back({{"signs", signs},
                        {"active", vec_to_json(e.active)},
                        {"infimum", e.infimum},
                        {"vertex", vec_to_json(e.vertex)}});
  }
  nlohmann::json j{{"critical", report.critical}, {"orthants", orthants}};
  j["witness"] =
      report.witness ? vec_to_json(*report.witness) : nlohmann::json();
  return j;
}

nlohmann::json trace_to_json(const Trace& trace, const std::string& problem,
                             const SolverConfig& cfg) {
  nlohmann::json records = nlohmann::json::array();
  for (const IterationRecord& r : trace.records) {
    nlohmann::json F;
    to_json(F, r.F);
    nlohmann::json rec{{"k", r.k},
                       {"x", vec_to_json(r.x)},
                       {"F", F},
                       {"d", vec_to_json(r.d)}};
    rec["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json();
    records.push_back(std::move(rec));
  }
  nlohmann::json j{{"problem", problem},
                   {"config", to_json(cfg)},
                   {"records", records},
                   {"termination", to_string(trace.termination)}};
  j["critical_check"] = trace.final_critical_check
                            ? to_json(*trace.final_critical_check)
                            : nlohmann::json();
  if (!trace.error.empty()) j["error"] = trace.error;
  return j;
}

std::string trace_to_csv(const Trace& trace) {
  std::ostringstream os;
  const int n =
      trace.records.empty() ? 0 : static_cast<int>(trace.records[0].x.size());
  os << "k";
  for (int i = 1; i <= n; ++i) os << ",x" << i;
  os << ",F_lo,F_hi";
  for (int i = 1; i <= n; ++i) os << ",d" << i;
  os << ",alpha\n";
  char buf[40];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const IterationRecord& r : trace.records) {
    os << r.k;
    for (int i = 0; i < n; ++i) os << "," << num(r.x[i]);
    os << "," << num(r.F.lo()) << "," << num(r.F.hi());
    for (int i = 0; i < n; ++i) os << "," << num(r.d[i]);
    os << ",";
    if (r.alpha) os << num(*r.alpha);
    os << "\n";
  }
  return os.str();
}

std::string format_point(const Eigen::VectorXd& v) {
  std::ostringstream os;
  char buf[40];
  os << "(";
  for (int i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.5f", i ? ", " : "", v[i]);
    os << buf;
  }
  os << ")";
  return os.str();
}

std::string format_interval_5(const Interval& a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "[%.5f, %.5f]", a.lo(), a.hi());
  return buf;
}

std::string format_box(const IntervalBox& box) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < box.size(); ++i)
    os << (i ? ", " : "") << format_interval_5(box[i]);
  os << ")";
  return os.str();
}

std::string format_table(const Trace& trace) {
  std::ostringstream os;
  os << "k | x^k | F(x^k) | d^k | alpha_k\n";
  for (const IterationRecord& r : trace.records) {
    os << r.k << " | " << format_point(r.x) << " | " << format_interval_5(r.F)
       << " | " << format_point(r.d) << " | ";
    if (r.alpha) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.5f", *r.alpha);
      os << buf;
    } else {
      os << "-";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ivopt
