// Command-line front end: solve, check-descent, verify-critical, eval.
//
// Exit codes: 0 success (solve: terminated at a small direction or critical
// box; check-descent: direction is descent; verify-critical: point is
// critical), 1 negative/failed result, 2 usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivopt/descent.hpp"
#include "ivopt/errors.hpp"
#include "ivopt/function.hpp"
#include "ivopt/problem.hpp"
#include "ivopt/solver.hpp"
#include "ivopt/trace_io.hpp"

namespace {

using ivopt::GradientMethod;
using ivopt::IVFunction;
using ivopt::ProblemSpec;
using ivopt::TStrategy;

struct CommonArgs {
  std::string problem;
  std::string problem_file;
  std::string expr;
  int dim = 0;
  std::string gradient = "analytic";
  double fd_step = ivopt::kDefaultFdStep;
};

struct SolveArgs {
  CommonArgs common;
  std::vector<std::string> x0;
  double epsilon = 1e-5;
  int max_iters = 200;
  std::string t_strategy = "zero";
  std::uint64_t seed = 0;
  bool t_redraw = false;
  double ls_tol = 1e-8;
  double alpha_max = 1e6;
  std::string format = "table";
  std::string out;
};

Eigen::VectorXd parse_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad number in vector: '" + item + "'");
    }
    while (used < item.size() && std::isspace((unsigned char)item[used]))
      ++used;
    if (used != item.size())
      throw CLI::ValidationError("bad number in vector: '" + item + "'");
    vals.push_back(v);
  }
  if (vals.empty()) throw CLI::ValidationError("empty vector");
  Eigen::VectorXd v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
  return v;
}

TStrategy parse_t_strategy(const std::string& text) {
  if (text == "zero") return TStrategy::zero();
  if (text == "midpoint") return TStrategy::midpoint();
  if (text == "random") return TStrategy::random(0);
  if (text.rfind("fixed:", 0) == 0) {
    const Eigen::VectorXd v = parse_vector(text.substr(6));
    return TStrategy::fixed(std::vector<double>(v.begin(), v.end()));
  }
  throw CLI::ValidationError(
      "t-strategy must be zero|midpoint|random|fixed:t1,...");
}

GradientMethod parse_gradient(const std::string& text) {
  if (text == "analytic") return GradientMethod::Analytic;
  if (text == "fd") return GradientMethod::FiniteDiff;
  throw CLI::ValidationError("gradient must be 'analytic' or 'fd'");
}

struct LoadedProblem {
  std::string label;
  ProblemSpec spec;
};

LoadedProblem load_problem(const CommonArgs& args) {
  int given = 0;
  given += !args.problem.empty();
  given += !args.problem_file.empty();
  given += !args.expr.empty();
  if (given != 1)
    throw CLI::ValidationError(
        "give exactly one of --problem, --problem-file, --expr");
  if (!args.problem.empty()) {
    auto spec = ivopt::builtin_problem(args.problem);
    if (!spec)
      throw CLI::ValidationError("unknown problem '" + args.problem + "'");
    return {args.problem, *spec};
  }
  if (!args.problem_file.empty()) {
    ProblemSpec spec = ivopt::load_problem_file(args.problem_file);
    return {spec.name, spec};
  }
  ProblemSpec spec;
  spec.name = args.expr;
  spec.dim = args.dim;
  spec.expr = args.expr;
  if (spec.dim == 0) {
    // Infer the dimension from the largest variable index used.
    for (int d = 1; d <= 64; ++d) {
      try {
        ivopt::parse_ivexpr(args.expr, d);
        spec.dim = d;
        break;
      } catch (const ivopt::ParseError&) {
        continue;
      }
    }
    if (spec.dim == 0)
      throw CLI::ValidationError("cannot parse --expr; check the syntax");
  }
  return {args.expr, spec};
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--problem", args.problem, "builtin problem id");
  cmd->add_option("--problem-file", args.problem_file,
                  "JSON problem description");
  cmd->add_option("--expr", args.expr, "interval expression");
  cmd->add_option("--dim", args.dim, "dimension for --expr (inferred if 0)");
  cmd->add_option("--gradient", args.gradient, "gradient method: analytic|fd")
      ->check(CLI::IsMember({"analytic", "fd"}));
  cmd->add_option("--fd-step", args.fd_step, "finite-difference base step");
}

void write_or_print(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ivopt::ModelError("cannot write to " + out);
  f << content;
}

int cmd_solve(const SolveArgs& args) {
  const LoadedProblem lp = load_problem(args.common);
  const IVFunction f = ivopt::make_function(lp.spec);

  std::vector<Eigen::VectorXd> starts;
  for (const std::string& s : args.x0) starts.push_back(parse_vector(s));
  if (starts.empty()) {
    if (lp.spec.default_x0.size() == 0)
      throw CLI::ValidationError("no --x0 given and the problem has none");
    starts.push_back(lp.spec.default_x0);
  }
  for (const Eigen::VectorXd& s : starts)
    if (s.size() != f.dim())
      throw CLI::ValidationError("--x0 dimension does not match the problem");

  ivopt::SolverConfig cfg;
  cfg.epsilon = args.epsilon;
  cfg.max_iters = args.max_iters;
  cfg.t_strategy = parse_t_strategy(args.t_strategy);
  cfg.t_strategy.seed = args.seed;
  cfg.ls.tol = args.ls_tol;
  cfg.ls.alpha_max = args.alpha_max;
  cfg.gradient_method = parse_gradient(args.common.gradient);
  cfg.fd_step = args.common.fd_step;
  cfg.seed = args.seed;
  cfg.redraw_t_each_iteration = args.t_redraw;

  std::vector<ivopt::Trace> traces;
  if (starts.size() == 1)
    traces.push_back(ivopt::run(f, starts[0], cfg));
  else
    traces = ivopt::multi_start(f, starts, cfg);

  std::ostringstream tables;
  nlohmann::json json_out = nlohmann::json::array();
  std::ostringstream csv;
  bool all_ok = true;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const ivopt::Trace& tr = traces[i];
    if (traces.size() > 1) tables << "start " << i << ":\n";
    tables << ivopt::format_table(tr);
    tables << "terminated: " << ivopt::to_string(tr.termination);
    if (!tr.error.empty()) tables << " (" << tr.error << ")";
    tables << "\n";
    if (tr.final_critical_check)
      tables << (tr.final_critical_check->critical
                     ? "final point is critical\n"
                     : "final point is NOT critical\n");
    json_out.push_back(ivopt::trace_to_json(tr, lp.label, cfg));
    csv << ivopt::trace_to_csv(tr);
    const bool ok = tr.termination == ivopt::Termination::SmallDirection ||
                    tr.termination == ivopt::Termination::CriticalBox;
    all_ok = all_ok && ok;
  }

  std::cout << tables.str();
  const nlohmann::json doc =
      traces.size() == 1 ? json_out[0] : nlohmann::json{{"runs", json_out}};
  if (args.format == "json")
    write_or_print(args.out, doc.dump(2) + "\n");
  else if (args.format == "csv")
    write_or_print(args.out, csv.str());
  else if (!args.out.empty())
    write_or_print(args.out, tables.str());
  return all_ok ? 0 : 1;
}

struct PointArgs {
  CommonArgs common;
  std::string point;
  std::string direction;  // check-descent only
  std::string format = "table";
};

int cmd_check_descent(const PointArgs& args) {
  const LoadedProblem lp = load_problem(args.common);
  const IVFunction f = ivopt::make_function(lp.spec);
  const Eigen::VectorXd x = parse_vector(args.point);
  const Eigen::VectorXd d = parse_vector(args.direction);
  if (x.size() != f.dim() || d.size() != f.dim())
    throw CLI::ValidationError("point/direction dimension mismatch");

  GradientMethod used;
  const ivopt::IntervalBox g = ivopt::gradient_box_with_fallback(
      f, x, parse_gradient(args.common.gradient), args.common.fd_step, &used);
  const ivopt::DescentCertificate cert = ivopt::certify(d, g);
  const bool in_set = ivopt::in_descent_set(d, g);

  if (args.format == "json") {
    nlohmann::json gj, sj;
    to_json(gj, g);
    to_json(sj, cert.S);
    nlohmann::json j{{"problem", lp.label},
                     {"point", std::vector<double>(x.begin(), x.end())},
                     {"direction", std::vector<double>(d.begin(), d.end())},
                     {"gradient_box", gj},
                     {"S", sj},
                     {"is_descent", cert.is_descent},
                     {"in_descent_set", in_set},
                     {"method", used == GradientMethod::Analytic ? "analytic"
                                                                 : "fd"}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "point: " << ivopt::format_point(x) << "\n";
    std::cout << "gradient box: " << ivopt::format_box(g) << "\n";
    std::cout << "direction: " << ivopt::format_point(d) << "\n";
    std::cout << "certificate S = " << ivopt::format_interval_5(cert.S)
              << "\n";
    std::cout << "descent: " << (cert.is_descent ? "yes" : "no") << "\n";
    std::cout << "in descent set: " << (in_set ? "yes" : "no") << "\n";
  }
  return cert.is_descent ? 0 : 1;
}

int cmd_verify_critical(const PointArgs& args) {
  const LoadedProblem lp = load_problem(args.common);
  const IVFunction f = ivopt::make_function(lp.spec);
  const Eigen::VectorXd x = parse_vector(args.point);
  if (x.size() != f.dim())
    throw CLI::ValidationError("point dimension does not match the problem");

  GradientMethod used;
  const ivopt::IntervalBox g = ivopt::gradient_box_with_fallback(
      f, x, parse_gradient(args.common.gradient), args.common.fd_step, &used);
  const bool critical = ivopt::is_critical(g);
  std::optional<ivopt::CriticalityReport> report;
  if (g.size() <= 16) report = ivopt::criticality_oracle(g);

  if (args.format == "json") {
    nlohmann::json gj;
    to_json(gj, g);
    nlohmann::json j{{"problem", lp.label},
                     {"point", std::vector<double>(x.begin(), x.end())},
                     {"gradient_box", gj},
                     {"critical", critical}};
    j["oracle"] = report ? to_json(*report) : nlohmann::json();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "point: " << ivopt::format_point(x) << "\n";
    std::cout << "gradient box: " << ivopt::format_box(g) << "\n";
    std::cout << "critical (closed form): " << (critical ? "yes" : "no")
              << "\n";
    if (report) {
      std::cout << "orthant analysis:\n" << ivopt::format_case_table(*report);
    } else {
      std::cout << "orthant analysis skipped (dimension above 16); "
                   "closed-form verdict only\n";
    }
  }
  return critical ? 0 : 1;
}

int cmd_eval(const PointArgs& args) {
  const LoadedProblem lp = load_problem(args.common);
  const IVFunction f = ivopt::make_function(lp.spec);
  const Eigen::VectorXd x = parse_vector(args.point);
  if (x.size() != f.dim())
    throw CLI::ValidationError("point dimension does not match the problem");

  const ivopt::Interval F = ivopt::evaluate(f, x);
  GradientMethod used;
  const ivopt::IntervalBox g = ivopt::gradient_box_with_fallback(
      f, x, parse_gradient(args.common.gradient), args.common.fd_step, &used);

  if (args.format == "json") {
    nlohmann::json Fj, gj;
    to_json(Fj, F);
    to_json(gj, g);
    nlohmann::json j{{"problem", lp.label},
                     {"x", std::vector<double>(x.begin(), x.end())},
                     {"F", Fj},
                     {"gradient", gj},
                     {"method", used == GradientMethod::Analytic ? "analytic"
                                                                 : "fd"}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "F" << ivopt::format_point(x) << " = "
              << ivopt::format_interval_5(F) << "\n";
    std::cout << "gradient box: " << ivopt::format_box(g) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descent on interval-valued functions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "generate a descent sequence from a start point");
  add_common(solve, solve_args.common);
  solve->add_option("--x0", solve_args.x0,
                    "start point 'a,b,...'; repeat for multi-start");
  solve->add_option("--epsilon", solve_args.epsilon,
                    "stop tolerance on the direction norm");
  solve->add_option("--max-iters", solve_args.max_iters, "iteration budget");
  solve->add_option("--t-strategy", solve_args.t_strategy,
                    "zero|midpoint|random|fixed:t1,...");
  solve->add_option("--seed", solve_args.seed, "seed for random strategies");
  solve->add_flag("--t-redraw", solve_args.t_redraw,
                  "redraw t every iteration");
  solve->add_option("--ls-tol", solve_args.ls_tol, "line search tolerance");
  solve->add_option("--alpha-max", solve_args.alpha_max,
                    "line search step budget");
  solve->add_option("--format", solve_args.format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  solve->add_option("--out", solve_args.out, "write output to a file");

  PointArgs descent_args;
  CLI::App* check = app.add_subcommand(
      "check-descent", "certify a direction at a point");
  add_common(check, descent_args.common);
  check->add_option("--point", descent_args.point, "evaluation point 'a,b'")
      ->required();
  check->add_option("--d", descent_args.direction, "direction 'a,b'")
      ->required();
  check->add_option("--format", descent_args.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  PointArgs critical_args;
  CLI::App* verify = app.add_subcommand(
      "verify-critical", "test a point for criticality");
  add_common(verify, critical_args.common);
  verify->add_option("--point", critical_args.point, "point 'a,b'")
      ->required();
  verify->add_option("--format", critical_args.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  PointArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate the function and gradient box at a point");
  add_common(eval, eval_args.common);
  eval->add_option("--point", eval_args.point, "point 'a,b'")->required();
  eval->add_option("--format", eval_args.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (check->parsed()) return cmd_check_descent(descent_args);
    if (verify->parsed()) return cmd_verify_critical(critical_args);
    if (eval->parsed()) return cmd_eval(eval_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ivopt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
