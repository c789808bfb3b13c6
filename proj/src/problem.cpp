#include "ivopt/problem.hpp"

#include <fstream>

#include <json.hpp>

#include "ivopt/errors.hpp"

namespace ivopt {

std::optional<ProblemSpec> builtin_problem(const std::string& id) {
  if (id == "paper-ex1") {
    ProblemSpec spec;
    spec.name = "paper-ex1";
    spec.dim = 2;
    spec.expr =
        "[2,4]*x1^2 + [2,3]*x1*x2 + [1,2]*x2^2 + [1,2]*x1 -M [1,3]*x2";
    spec.default_x0 = Eigen::Vector2d(1.0, 1.0);
    return spec;
  }
  return std::nullopt;
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open problem file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError("problem file is not valid JSON: " + std::string(e.what()));
  }
  ProblemSpec spec;
  spec.name = j.value("name", path);
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ModelError("problem file needs an integer 'dim'");
  spec.dim = j["dim"].get<int>();
  if (j.contains("expr")) {
    spec.expr = j["expr"].get<std::string>();
  } else if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (!b.contains("lower") || !b.contains("upper"))
      throw ModelError("problem bounds need 'lower' and 'upper' expressions");
    spec.lower_expr = b["lower"].get<std::string>();
    spec.upper_expr = b["upper"].get<std::string>();
  } else {
    throw ModelError("problem file needs 'expr' or 'bounds'");
  }
  if (j.contains("x0")) {
    const auto& x0 = j["x0"];
    if (!x0.is_array() || static_cast<int>(x0.size()) != spec.dim)
      throw ModelError("'x0' must be an array of length dim");
    spec.default_x0.resize(spec.dim);
    for (int i = 0; i < spec.dim; ++i)
      spec.default_x0[i] = x0[i].get<double>();
  }
  return spec;
}

IVFunction make_function(const ProblemSpec& spec) {
  if (spec.has_bounds()) {
    // Bound pair given as two real expressions over x1..xn.
    const IVExpr lower = parse_ivexpr("[1,1]*(" + spec.lower_expr + ")",
                                      spec.dim);
    const IVExpr upper = parse_ivexpr("[1,1]*(" + spec.upper_expr + ")",
                                      spec.dim);
    const RealExpr lo = lower.terms().front().basis;
    const RealExpr hi = upper.terms().front().basis;
    return IVFunction(
        [lo](const Eigen::VectorXd& x) { return lo.value(x); },
        [hi](const Eigen::VectorXd& x) { return hi.value(x); }, spec.dim);
  }
  return IVFunction(parse_ivexpr(spec.expr, spec.dim));
}

}  // namespace ivopt
